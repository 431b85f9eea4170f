// Tests for rational parametrizations of finite point sets: the structural
// invariants, the recursion-facing operations (project / image / union /
// lift), certified real-point extraction, and exact verification against a
// pencil determinant.
#include "doctest.h"

#include <vector>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "realdet/errors.hpp"
#include "realdet/parametrization.hpp"
#include "realdet/unipoly.hpp"

using realdet::LinearMatrix;
using realdet::MultiPoly;
using realdet::Rational;
using realdet::RationalInterval;
using realdet::RationalMatrix;
using realdet::RationalParametrization;
using realdet::RealPointBox;
using realdet::SampleSet;
using realdet::UniPoly;

namespace {

// {(1, 5), (2, 7)}: q0 = 1, coordinates (t, 2t + 3), qlast = (t-1)(t-2).
RationalParametrization two_points() {
  RationalParametrization rp;
  rp.ncoords = 2;
  rp.q0 = UniPoly::constant(Rational(1));
  rp.q = {UniPoly::t(),
          UniPoly({Rational(3), Rational(2)})};
  rp.qlast = UniPoly({Rational(2), Rational(-3), Rational(1)});
  return rp;
}

// {(±√2, ±√2)}: both coordinates equal, qlast = t^2 - 2.
RationalParametrization sqrt2_diagonal() {
  RationalParametrization rp;
  rp.ncoords = 2;
  rp.q0 = UniPoly::constant(Rational(1));
  rp.q = {UniPoly::t(), UniPoly::t()};
  rp.qlast = UniPoly({Rational(-2), Rational(0), Rational(1)});
  return rp;
}

}  // namespace

TEST_CASE("structural invariants are enforced by validate") {
  RationalParametrization rp = two_points();
  CHECK_NOTHROW(rp.validate());
  CHECK(rp.degree() == 2);
  CHECK_FALSE(rp.empty());

  RationalParametrization sq = rp;
  sq.qlast = sq.qlast * sq.qlast;  // not squarefree
  CHECK_THROWS_AS(sq.validate(), realdet::PreconditionError);

  RationalParametrization neg = rp;
  neg.qlast = neg.qlast * Rational(-1);  // negative leading coefficient
  CHECK_THROWS_AS(neg.validate(), realdet::PreconditionError);

  RationalParametrization shared = rp;
  shared.q0 = UniPoly({Rational(-1), Rational(1)});  // q0(1) = 0, qlast(1) = 0
  CHECK_THROWS_AS(shared.validate(), realdet::PreconditionError);

  RationalParametrization wrong = rp;
  wrong.q.pop_back();  // ncoords disagrees with q.size()
  CHECK_THROWS_AS(wrong.validate(), realdet::PreconditionError);

  RationalParametrization empty;
  empty.ncoords = 3;
  empty.q = {UniPoly::zero(), UniPoly::zero(), UniPoly::zero()};
  CHECK_NOTHROW(empty.validate());
  CHECK(empty.empty());
  CHECK(empty.degree() == 0);
}

TEST_CASE("projection keeps selected coordinates") {
  RationalParametrization rp = two_points();
  RationalParametrization first = realdet::project(rp, {0});
  CHECK(first.ncoords == 1);
  CHECK(first.q.size() == 1);
  CHECK(first.q[0] == rp.q[0]);
  CHECK(first.qlast == rp.qlast);
  CHECK(first.q0 == rp.q0);
  // Roots t = 1, 2 still evaluate to the x-coordinates 1 and 2.
  CHECK(first.q[0](Rational(1)) == Rational(1));
  CHECK(first.q[0](Rational(2)) == Rational(2));

  // Reorder and duplicate.
  RationalParametrization perm = realdet::project(rp, {1, 0, 1});
  CHECK(perm.ncoords == 3);
  CHECK(perm.q[0] == rp.q[1]);
  CHECK(perm.q[1] == rp.q[0]);
  CHECK(perm.q[2] == rp.q[1]);

  CHECK_THROWS_AS(realdet::project(rp, {}), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::project(rp, {2}), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::project(rp, {-1}), realdet::PreconditionError);
}

TEST_CASE("linear images transform the encoded points") {
  RationalParametrization rp = two_points();

  RationalMatrix id = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  RationalParametrization same = realdet::image(rp, id);
  CHECK(same.q == rp.q);

  RationalMatrix swap = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  RationalParametrization swapped = realdet::image(rp, swap);
  CHECK(swapped.q[0] == rp.q[1]);
  CHECK(swapped.q[1] == rp.q[0]);

  RationalMatrix twice = {{Rational(2), Rational(0)}, {Rational(0), Rational(2)}};
  RationalParametrization doubled = realdet::image(rp, twice);
  // (1,5) -> (2,10): evaluate at the root t = 1.
  CHECK(doubled.q[0](Rational(1)) / doubled.q0(Rational(1)) == Rational(2));
  CHECK(doubled.q[1](Rational(1)) / doubled.q0(Rational(1)) == Rational(10));

  // image is functorial: applying M then M^{-1} restores the numerators.
  RationalMatrix m = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  RationalParametrization there = realdet::image(rp, m);
  RationalParametrization back =
      realdet::image(there, realdet::rational_matrix_inverse(m));
  CHECK(back.q == rp.q);
  CHECK(back.qlast == rp.qlast);

  RationalMatrix sing = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK_THROWS_AS(realdet::image(rp, sing), realdet::PreconditionError);
  RationalMatrix wrong = {{Rational(1)}};
  CHECK_THROWS_AS(realdet::image(rp, wrong), realdet::PreconditionError);
}

TEST_CASE("sample-set unions concatenate and add degrees") {
  SampleSet a;
  a.items = {two_points()};
  SampleSet b;
  b.items = {sqrt2_diagonal(), two_points()};
  SampleSet u = realdet::sample_union(a, b);
  CHECK(u.items.size() == 3);
  CHECK(u.degree_sum() == 6);
  CHECK(u.ncoords() == 2);

  SampleSet none;
  CHECK(realdet::sample_union(none, a).items.size() == 1);
  CHECK(realdet::sample_union(a, none).degree_sum() == 2);
  CHECK(none.degree_sum() == 0);
  CHECK(none.ncoords() == -1);

  // Mismatched coordinate counts are rejected.
  SampleSet one_d;
  one_d.items = {realdet::project(two_points(), {0})};
  CHECK_THROWS_AS(realdet::sample_union(a, one_d), realdet::PreconditionError);
}

TEST_CASE("lift inserts a constant coordinate") {
  // {(2)} with qlast = t - 2, lifted by t0 = 5 at position 0: {(5, 2)}.
  RationalParametrization rp;
  rp.ncoords = 1;
  rp.q = {UniPoly::t()};
  rp.qlast = UniPoly({Rational(-2), Rational(1)});
  RationalParametrization lifted = realdet::lift(rp, Rational(5), 0);
  CHECK(lifted.ncoords == 2);
  CHECK(lifted.q[0](Rational(2)) / lifted.q0(Rational(2)) == Rational(5));
  CHECK(lifted.q[1](Rational(2)) / lifted.q0(Rational(2)) == Rational(2));
  CHECK(lifted.qlast == rp.qlast);

  // Lift then project drops back to the original.
  RationalParametrization round = realdet::project(lifted, {1});
  CHECK(round.q == rp.q);
  CHECK(round.qlast == rp.qlast);

  // Position N appends.
  RationalParametrization tail = realdet::lift(rp, Rational(-7, 3), 1);
  CHECK(tail.q[1](Rational(2)) / tail.q0(Rational(2)) == Rational(-7, 3));

  CHECK_THROWS_AS(realdet::lift(rp, Rational(1), 2), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::lift(rp, Rational(1), -1), realdet::PreconditionError);
}

TEST_CASE("certified real points of t^2 = 2 on the diagonal") {
  RationalParametrization rp = sqrt2_diagonal();
  std::vector<RealPointBox> pts = realdet::extract_real_points(rp, 10);
  REQUIRE(pts.size() == 2);

  // Points are ordered by the t-intervals: -sqrt(2) first.  Containment of
  // +/-sqrt(2) is certified exactly: a box [a,b] holds sqrt(2) iff a^2 <= 2
  // <= b^2 (endpoints positive), and -sqrt(2) iff b^2 <= 2 <= a^2 (negative).
  const RealPointBox& minus = pts[0];
  const RealPointBox& plus = pts[1];
  Rational two(2);
  Rational width_cap(1, 10000000000L);  // 10 certified digits
  for (int i = 0; i < 2; ++i) {
    CHECK(minus.box[i].hi() < Rational(0));
    CHECK(minus.box[i].hi() * minus.box[i].hi() <= two);
    CHECK(two <= minus.box[i].lo() * minus.box[i].lo());
    CHECK(minus.box[i].hi() - minus.box[i].lo() <= width_cap);
    CHECK(plus.box[i].lo() > Rational(0));
    CHECK(plus.box[i].lo() * plus.box[i].lo() <= two);
    CHECK(two <= plus.box[i].hi() * plus.box[i].hi());
    CHECK(plus.box[i].hi() - plus.box[i].lo() <= width_cap);
  }
  CHECK(minus.item == 0);
  // t-intervals actually isolate: disjoint, each containing one sign change.
  CHECK(minus.t_interval.hi() < plus.t_interval.lo());

  // Box containment invariant: evaluating the coordinates on the t-interval
  // must land inside the reported box.
  for (const RealPointBox& p : pts) {
    RationalInterval tv = p.t_interval;
    RationalInterval num = rp.q[0](tv);
    RationalInterval den = rp.q0(tv);
    RationalInterval val = num / den;
    CHECK(p.box[0].lo() <= val.hi());
    CHECK(val.lo() <= p.box[0].hi());
  }

  // No real roots: empty vector.
  RationalParametrization imag = rp;
  imag.qlast = UniPoly({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
  CHECK(realdet::extract_real_points(imag, 10).empty());

  // Rational roots give exact (possibly zero-width) boxes.
  std::vector<RealPointBox> exact =
      realdet::extract_real_points(two_points(), 10);
  REQUIRE(exact.size() == 2);
  CHECK(exact[0].box[0].lo() == Rational(1));
  CHECK(exact[0].box[0].hi() == Rational(1));
  CHECK(exact[0].box[1].lo() == Rational(5));
  CHECK(exact[1].box[1].lo() == Rational(7));
}

TEST_CASE("extraction over a sample set tags the item index") {
  SampleSet s;
  s.items = {two_points(), sqrt2_diagonal()};
  std::vector<RealPointBox> pts = realdet::extract_real_points(s, 8);
  REQUIRE(pts.size() == 4);
  int from0 = 0, from1 = 0;
  for (const RealPointBox& p : pts) {
    REQUIRE(p.box.size() == 2);
    if (p.item == 0) ++from0;
    if (p.item == 1) ++from1;
  }
  CHECK(from0 == 2);
  CHECK(from1 == 2);
}

TEST_CASE("substitution and determinant verification") {
  // The diagonal sqrt(2) points solve x1^2 + x2^2 - 4 = 0... no: 2 + 2 = 4.
  MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  MultiPoly four_circle = x1 * x1 + x2 * x2 - MultiPoly::constant(2, Rational(4));
  CHECK(realdet::substitute_parametrization(sqrt2_diagonal(), four_circle)
            .is_zero());
  // ...but not the unit circle.
  MultiPoly unit_circle = x1 * x1 + x2 * x2 - MultiPoly::constant(2, Rational(1));
  CHECK_FALSE(
      realdet::substitute_parametrization(sqrt2_diagonal(), unit_circle)
          .is_zero());

  // (1, 0) lies on det circle_pencil = 1 - x1^2 - x2^2.
  LinearMatrix circle = testutil::circle_pencil();
  RationalParametrization on;
  on.ncoords = 2;
  on.q = {UniPoly::t(), UniPoly::zero()};
  on.qlast = UniPoly({Rational(-1), Rational(1)});  // t = 1
  CHECK(realdet::verify_on_determinant(on, circle));

  RationalParametrization off = on;
  off.qlast = UniPoly({Rational(0), Rational(1)});  // t = 0: the origin
  CHECK_FALSE(realdet::verify_on_determinant(off, circle));

  // The empty parametrization verifies trivially.
  RationalParametrization none;
  none.ncoords = 2;
  none.q = {UniPoly::zero(), UniPoly::zero()};
  CHECK(realdet::verify_on_determinant(none, circle));

  // Denominators are handled exactly: {(1/2, 0)} on the circle of radius 1/2
  // scaled... use det = 1 - x1^2 - x2^2 and the point (3/5, 4/5).
  RationalParametrization pythagoras;
  pythagoras.ncoords = 2;
  pythagoras.q0 = UniPoly::constant(Rational(5));
  pythagoras.q = {UniPoly::constant(Rational(3)), UniPoly::constant(Rational(4))};
  pythagoras.qlast = UniPoly::t();  // single root t = 0
  CHECK(realdet::verify_on_determinant(pythagoras, circle));
}

TEST_CASE("parametrization JSON roundtrips") {
  RationalParametrization rp = two_points();
  RationalParametrization back =
      RationalParametrization::from_json(rp.to_json());
  CHECK(back.ncoords == rp.ncoords);
  CHECK(back.q0 == rp.q0);
  CHECK(back.q == rp.q);
  CHECK(back.qlast == rp.qlast);

  SampleSet s;
  s.items = {two_points(), sqrt2_diagonal()};
  SampleSet sback = SampleSet::from_json(s.to_json());
  REQUIRE(sback.items.size() == 2);
  CHECK(sback.items[0].qlast == s.items[0].qlast);
  CHECK(sback.items[1].q == s.items[1].q);
  CHECK(sback.degree_sum() == 4);

  nlohmann::json j = rp.to_json();
  j["qlast"] = nlohmann::json::array();  // zero polynomial is not allowed
  CHECK_THROWS_AS(RationalParametrization::from_json(j), realdet::ParseError);
}
