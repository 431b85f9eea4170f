// Sparse multivariate polynomials: arithmetic, calculus, substitution, and
// the bivariate resultant (checked against an explicit Sylvester-matrix
// oracle).
#include "doctest.h"

#include <map>
#include <vector>

#include "helpers.hpp"
#include "realdet/errors.hpp"
#include "realdet/multipoly.hpp"
#include "realdet/rng.hpp"
#include "realdet/unipoly.hpp"

#include <nlohmann/json.hpp>

using realdet::Monomial;
using realdet::MultiPoly;
using realdet::Rational;
using realdet::RationalInterval;
using realdet::Rng;
using realdet::UniPoly;

namespace {

Monomial mono2(int e1, int e2) {
  return Monomial(std::vector<std::int32_t>{e1, e2});
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  const MultiPoly one = MultiPoly::constant(2, Rational(1));

  MultiPoly want(2);
  want.add_term(mono2(2, 0), Rational(1));
  want.add_term(mono2(0, 0), Rational(-1));
  CHECK((x1 + one) * (x1 - one) == want);

  const MultiPoly p = x1 * x2 + x2 * x2;
  CHECK(p + MultiPoly(2) == p);
  CHECK(x1 * x2 - x2 == x2 * (x1 - one));
  CHECK((p - p).is_zero());
}

TEST_CASE("partial derivatives") {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  CHECK(partial_derivative(x1 * x1 * x2, 0) ==
        x1 * x2 * Rational(2));
  CHECK(partial_derivative(MultiPoly::constant(2, Rational(5)), 1).is_zero());
  CHECK(partial_derivative(x1 + x2 * x2, 1) == x2 * Rational(2));
}

TEST_CASE("substitution") {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);

  std::map<int, MultiPoly> three{{0, MultiPoly::constant(2, Rational(3))}};
  CHECK(substitute(x1 * x1 + x2, three) ==
        x2 + MultiPoly::constant(2, Rational(9)));

  std::map<int, MultiPoly> shift{{0, x1 + x2}};
  CHECK(substitute(x1, shift) == x1 + x2);

  // Circle determinant restricted to the x1 axis.
  const MultiPoly circle = MultiPoly::constant(2, Rational(1)) - x1 * x1 - x2 * x2;
  std::map<int, MultiPoly> axis{{1, MultiPoly(2)}};
  CHECK(substitute(circle, axis) ==
        MultiPoly::constant(2, Rational(1)) - x1 * x1);
}

TEST_CASE("evaluation is exact and interval evaluation encloses it") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly p(2);
    for (int t = 0; t < 5; ++t)
      p.add_term(mono2(static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3))),
                 Rational(realdet::Integer(static_cast<long>(rng.range(-9, 9)))));
    const Rational a(realdet::Integer(static_cast<long>(rng.range(-20, 20))), realdet::Integer(7));
    const Rational b(realdet::Integer(static_cast<long>(rng.range(-20, 20))), realdet::Integer(5));
    const Rational exact = evaluate(p, {a, b});
    const Rational pad(realdet::Integer(1), realdet::Integer(64));
    const RationalInterval enclosure = evaluate_interval(
        p, {RationalInterval(a - pad, a + pad), RationalInterval(b - pad, b + pad)});
    CHECK(enclosure.contains(exact));
  }
}

TEST_CASE("resultant matches the displayed example") {
  // Res_x2(x1^2 + x2^2 - 1, 2 x2) = 4 (x1^2 - 1).
  MultiPoly f(2);
  f.add_term(mono2(2, 0), Rational(1));
  f.add_term(mono2(0, 2), Rational(1));
  f.add_term(mono2(0, 0), Rational(-1));
  MultiPoly g(2);
  g.add_term(mono2(0, 1), Rational(2));

  MultiPoly want(2);
  want.add_term(mono2(2, 0), Rational(4));
  want.add_term(mono2(0, 0), Rational(-4));
  CHECK(resultant(f, g, 1) == want);
}

TEST_CASE("resultant of univariate polynomials is the Sylvester determinant") {
  // (x1 - 1, x1 + 1): nonzero constant of magnitude 2.
  const MultiPoly x1 = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, Rational(1));
  const MultiPoly r = resultant(x1 - one, x1 + one, 0);
  CHECK(r.is_constant());
  CHECK(r.constant_term().abs() == Rational(2));

  // Res(p, p) = 0.
  const MultiPoly p = x1 * x1 + x1 - one;
  CHECK(resultant(p, p, 0).is_zero());

  // Random pairs against the explicit Sylvester matrix oracle.
  Rng rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> ca, cb;
    do {
      ca.clear();
      for (int i = 0; i <= 1 + static_cast<int>(rng.below(4)); ++i)
        ca.push_back(Rational(realdet::Integer(static_cast<long>(rng.range(-9, 9)))));
    } while (UniPoly(ca).degree() < 1);
    do {
      cb.clear();
      for (int i = 0; i <= 1 + static_cast<int>(rng.below(4)); ++i)
        cb.push_back(Rational(realdet::Integer(static_cast<long>(rng.range(-9, 9)))));
    } while (UniPoly(cb).degree() < 1);
    const UniPoly ua(ca), ub(cb);
    const MultiPoly res =
        resultant(from_unipoly(ua, 1, 0), from_unipoly(ub, 1, 0), 0);
    REQUIRE(res.is_constant());
    CHECK(res.constant_term() == testutil::sylvester_resultant(ua, ub));
  }

  CHECK_THROWS_AS(resultant(one, one + one, 0), realdet::PreconditionError);
}

TEST_CASE("unipoly embedding round trips") {
  const UniPoly p({Rational(1), Rational(-3), Rational(0), Rational(2)});
  const MultiPoly embedded = from_unipoly(p, 3, 1);
  CHECK(to_unipoly(embedded, 1) == p);
  CHECK_THROWS_AS(to_unipoly(MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1), 0),
                  realdet::PreconditionError);
}

TEST_CASE("multivariate JSON round trip") {
  MultiPoly p(2);
  p.add_term(mono2(2, 1), Rational(realdet::Integer(-7), realdet::Integer(3)));
  p.add_term(mono2(0, 0), Rational(4));
  const nlohmann::json j = p.to_json();
  CHECK(MultiPoly::from_json(j, 2) == p);
}

TEST_CASE("compose maps into the target ring") {
  // p(x1, x2) = x1 * x2 composed with (t, t+1) in a 1-variable ring.
  const MultiPoly p = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
  const MultiPoly t = MultiPoly::variable(1, 0);
  const MultiPoly image = compose(p, {t, t + MultiPoly::constant(1, Rational(1))});
  CHECK(image == t * t + t);
}
