// Shared fixtures and independent oracles for the test suite.
//
// The oracles here deliberately avoid the library code paths they are used
// to check: the determinant oracle is the Leibniz permutation sum (the
// library uses memoized Laplace expansion), the resultant oracle builds the
// Sylvester matrix explicitly and eliminates with fraction-free Gaussian
// steps (the library goes through its polynomial-matrix determinant), and
// the conic component oracle analyzes the discriminant of the fiber
// quadratic directly (the solver runs the critical-point recursion).
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "realdet/errors.hpp"
#include "realdet/interval.hpp"
#include "realdet/linear_matrix.hpp"
#include "realdet/monomial.hpp"
#include "realdet/multipoly.hpp"
#include "realdet/parametrization.hpp"
#include "realdet/rational.hpp"
#include "realdet/unipoly.hpp"

namespace testutil {

using realdet::LinearMatrix;
using realdet::Monomial;
using realdet::MonomialOrder;
using realdet::MultiPoly;
using realdet::Rational;
using realdet::RationalInterval;
using realdet::RationalMatrix;
using realdet::UniPoly;

// ---------------------------------------------------------------------------
// Monomial-level primitives, for checking Groebner output from first
// principles (independent of the engine's internal reduction).
// ---------------------------------------------------------------------------

// Leading term of p in the given order; p must be nonzero.
inline std::pair<Monomial, Rational> leading_term(const MultiPoly& p,
                                                  const MonomialOrder& ord) {
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (ord.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

// S-polynomial: cancel the leading terms of f and g against their least
// common multiple.
inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                              const MonomialOrder& ord) {
  auto [mf, cf] = leading_term(f, ord);
  auto [mg, cg] = leading_term(g, ord);
  Monomial l = mf.lcm(mg);
  MultiPoly a = MultiPoly::term(mf.quotient_of(l), Rational(1) / cf) * f;
  MultiPoly b = MultiPoly::term(mg.quotient_of(l), Rational(1) / cg) * g;
  return a - b;
}

// ---------------------------------------------------------------------------
// Pencil fixtures
// ---------------------------------------------------------------------------

inline RationalMatrix zero_matrix(int m) {
  return RationalMatrix(static_cast<std::size_t>(m),
                        std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
}

// Symmetric 3x3 pencil with ones on the diagonal and the three variables in
// the off-diagonal slots.  Its determinant is the cubic surface
// 1 + 2*x1*x2*x3 - x1^2 - x2^2 - x3^2 with four isolated singular points.
inline LinearMatrix cayley_pencil() {
  LinearMatrix a;
  a.m = 3;
  a.n = 3;
  RationalMatrix A0 = zero_matrix(3);
  A0[0][0] = A0[1][1] = A0[2][2] = Rational(1);
  RationalMatrix A1 = zero_matrix(3);
  A1[0][1] = A1[1][0] = Rational(1);
  RationalMatrix A2 = zero_matrix(3);
  A2[0][2] = A2[2][0] = Rational(1);
  RationalMatrix A3 = zero_matrix(3);
  A3[1][2] = A3[2][1] = Rational(1);
  a.A = {A0, A1, A2, A3};
  a.validate();
  return a;
}

// Tridiagonal symmetric 4x4 pencil in two variables whose determinant is the
// quartic x1^4 + 3*x1^2*x2^2 + x2^4 - x1*x2^2 - 5*x1^2 - 7*x2^2 + 4, a smooth
// curve made of two nested ovals (so the sampler must place points on both).
inline LinearMatrix nested_oval_quartic_pencil() {
  LinearMatrix a;
  a.m = 4;
  a.n = 2;
  RationalMatrix A0 = zero_matrix(4);
  A0[0][0] = Rational(1);
  A0[1][1] = Rational(1);
  A0[2][2] = Rational(2);
  A0[3][3] = Rational(2);
  RationalMatrix A1 = zero_matrix(4);
  A1[0][0] = Rational(1);
  A1[1][1] = Rational(-1);
  A1[2][2] = Rational(1);
  A1[3][3] = Rational(-1);
  RationalMatrix A2 = zero_matrix(4);
  A2[0][1] = A2[1][0] = Rational(1);
  A2[1][2] = A2[2][1] = Rational(1);
  A2[2][3] = A2[3][2] = Rational(1);
  a.A = {A0, A1, A2};
  a.validate();
  return a;
}

// 2x2 pencil with det = 1 - x1^2 - x2^2: the unit circle.
inline LinearMatrix circle_pencil() {
  LinearMatrix a;
  a.m = 2;
  a.n = 2;
  RationalMatrix A0 = zero_matrix(2);
  A0[0][0] = A0[1][1] = Rational(1);
  RationalMatrix A1 = zero_matrix(2);
  A1[0][0] = Rational(1);
  A1[1][1] = Rational(-1);
  RationalMatrix A2 = zero_matrix(2);
  A2[0][1] = A2[1][0] = Rational(1);
  a.A = {A0, A1, A2};
  a.validate();
  return a;
}

// ---------------------------------------------------------------------------
// Determinant oracle: Leibniz permutation sum
// ---------------------------------------------------------------------------

// Sign of a permutation by counting inversions.
inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

inline MultiPoly leibniz_determinant(const std::vector<std::vector<MultiPoly>>& a) {
  const int m = static_cast<int>(a.size());
  const int nvars = a[0][0].nvars();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(nvars);
  do {
    MultiPoly prod = MultiPoly::constant(nvars, Rational(permutation_sign(perm)));
    for (int i = 0; i < m; ++i) prod = prod * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// det A(x) of a pencil via the Leibniz sum (entry polynomials built directly).
inline MultiPoly leibniz_pencil_determinant(const LinearMatrix& a) {
  std::vector<std::vector<MultiPoly>> entries(
      static_cast<std::size_t>(a.m),
      std::vector<MultiPoly>(static_cast<std::size_t>(a.m), MultiPoly(a.n)));
  for (int i = 0; i < a.m; ++i) {
    for (int j = 0; j < a.m; ++j) {
      MultiPoly e = MultiPoly::constant(a.n, a.A[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      for (int k = 1; k <= a.n; ++k) {
        e += MultiPoly::variable(a.n, k - 1) *
             a.A[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  }
  return leibniz_determinant(entries);
}

// ---------------------------------------------------------------------------
// Resultant oracle: explicit Sylvester matrix + fraction-free elimination
// ---------------------------------------------------------------------------

// Determinant of a rational matrix by fraction-free Gaussian elimination
// (Bareiss), written against plain Rational arithmetic.
inline Rational bareiss_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational sign(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  Rational det = sign;
  for (std::size_t k = 0; k < n; ++k) det *= a[k][k];
  return det;
}

// Res(f, g) for univariate rational polynomials from the (deg g + deg f)
// Sylvester matrix.  Both inputs must be nonzero with deg f + deg g >= 1.
inline Rational sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  const int df = f.degree();
  const int dg = g.degree();
  const int size = df + dg;
  std::vector<std::vector<Rational>> s(
      static_cast<std::size_t>(size),
      std::vector<Rational>(static_cast<std::size_t>(size), Rational(0)));
  for (int r = 0; r < dg; ++r)
    for (int j = 0; j <= df; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(df - j);
  for (int r = 0; r < df; ++r)
    for (int j = 0; j <= dg; ++j) s[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + j)] = g.coeff(dg - j);
  return bareiss_determinant(std::move(s));
}

// ---------------------------------------------------------------------------
// Conic component oracle
// ---------------------------------------------------------------------------

// Connected-component analysis of a conic curve {g = 0} in the plane, done
// by eliminating x2: the critical x1 values are the roots of
// Res_x2(g, dg/dx2), fibers between consecutive critical values carry a
// constant number of points (0 or 2), and branches join exactly at the
// critical fibers (where the fiber quadratic has a double root).  Requires a
// nonzero x2^2 coefficient, which also rules out vertical line components.
//
// Components are numbered 0..count-1; classify() places a certified solver
// point box into a component by locating its x1 range strictly between
// critical values and, when the two branches over that range belong to
// different components, reading the branch off the sign of
// 2*c02*x2 + c11*x1 + c01 (the square root of the fiber discriminant).
struct ConicComponents {
  Rational c20, c11, c02, c10, c01, c00;
  UniPoly disc;                     // fiber discriminant D(x1), degree <= 2
  UniPoly sf_disc;                  // its squarefree part
  std::vector<RationalInterval> critical;  // isolating intervals, ascending
  std::vector<int> fiber_count;     // per open interval, 0 or 2; size = #critical + 1
  std::vector<std::array<int, 2>> component_of;  // [interval][branch] -> id, -1 if empty
  int count = 0;

  // classify returns the component id, or -1 when the box is too wide to
  // decide (caller should re-extract the point with more digits).
  int classify(const std::vector<RationalInterval>& box) const {
    const RationalInterval& x1 = box[0];
    int interval = 0;
    for (const auto& c : critical) {
      if (c.hi() < x1.lo()) {
        ++interval;
      } else if (!(x1.hi() < c.lo())) {
        return -1;  // box overlaps a critical isolator
      }
    }
    const auto& ids = component_of[static_cast<std::size_t>(interval)];
    if (ids[0] < 0) return -1;  // point claims to sit over an empty interval
    if (ids[0] == ids[1]) return ids[0];
    // Branch test: sign of 2*c02*x2 + c11*x1 + c01 over the box.
    const RationalInterval h = box[1] * RationalInterval(Rational(2) * c02) +
                               box[0] * RationalInterval(c11) +
                               RationalInterval(c01);
    if (h.lo().sign() > 0) return ids[1];
    if (h.hi().sign() < 0) return ids[0];
    return -1;
  }
};

// Union-find on a small fixed node set.
inline int uf_find(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}
inline void uf_union(std::vector<int>& parent, int a, int b) {
  parent[static_cast<std::size_t>(uf_find(parent, a))] = uf_find(parent, b);
}

// Builds the component analysis of the conic g (2 variables, total degree 2,
// nonzero x2^2 coefficient).  Throws PreconditionError on unsupported input.
inline ConicComponents conic_components(const MultiPoly& g) {
  if (g.nvars() != 2 || g.total_degree() > 2)
    throw realdet::PreconditionError("conic oracle: expected a bivariate conic");
  auto mono = [](int e1, int e2) {
    return Monomial(std::vector<std::int32_t>{e1, e2});
  };
  ConicComponents oracle;
  oracle.c20 = g.coeff(mono(2, 0));
  oracle.c11 = g.coeff(mono(1, 1));
  oracle.c02 = g.coeff(mono(0, 2));
  oracle.c10 = g.coeff(mono(1, 0));
  oracle.c01 = g.coeff(mono(0, 1));
  oracle.c00 = g.coeff(mono(0, 0));
  if (oracle.c02.is_zero())
    throw realdet::PreconditionError("conic oracle: fiber quadratic degenerates (zero x2^2 coefficient)");

  // Fiber discriminant D(x1) = (c11 x1 + c01)^2 - 4 c02 (c20 x1^2 + c10 x1 + c00).
  const UniPoly lin({oracle.c01, oracle.c11});
  const UniPoly quad({oracle.c00, oracle.c10, oracle.c20});
  oracle.disc = lin * lin - quad * (Rational(4) * oracle.c02);

  // Cross-check against the prescribed elimination: Res_x2(g, dg/dx2) equals
  // -c02 * D up to nothing at all (exact scalar identity for quadratics).
  {
    const MultiPoly gx2 = partial_derivative(g, 1);
    const MultiPoly res = resultant(g, gx2, 1);
    UniPoly r = to_unipoly(res, 0);
    UniPoly expect = oracle.disc * (-oracle.c02);
    if (r != expect)
      throw realdet::PreconditionError("conic oracle: resultant disagrees with the fiber discriminant");
  }

  if (oracle.disc.is_zero()) {
    // g = c02 * (x2 - line(x1))^2: a double line, one component.
    oracle.fiber_count = {2};
    oracle.component_of.push_back({0, 0});
    oracle.count = 1;
    return oracle;
  }

  oracle.sf_disc = realdet::squarefree_part(oracle.disc);
  if (oracle.sf_disc.degree() >= 1) {
    oracle.critical = realdet::sturm_isolate(oracle.sf_disc);
    // Shrink the isolators so that sampling between them is easy.
    for (auto& iv : oracle.critical)
      iv = realdet::refine_root(oracle.sf_disc, iv, Rational(1, 1024));
  }
  const int k = static_cast<int>(oracle.critical.size());

  // Sample one rational point inside each open interval and count the fiber.
  oracle.fiber_count.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i <= k; ++i) {
    Rational s;
    if (k == 0) {
      s = Rational(0);
    } else if (i == 0) {
      s = oracle.critical.front().lo() - Rational(1);
    } else if (i == k) {
      s = oracle.critical.back().hi() + Rational(1);
    } else {
      s = (oracle.critical[static_cast<std::size_t>(i) - 1].hi() +
           oracle.critical[static_cast<std::size_t>(i)].lo()) /
          Rational(2);
    }
    oracle.fiber_count[static_cast<std::size_t>(i)] = oracle.disc(s).sign() > 0 ? 2 : 0;
  }

  // Branch graph: nodes (interval, lower/upper); at every critical value the
  // branches of the adjacent nonempty intervals all meet in the unique
  // critical fiber point.
  std::vector<int> parent(2 * static_cast<std::size_t>(k + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto node = [&](int interval, int branch) { return 2 * interval + branch; };
  int isolated = 0;
  for (int c = 0; c < k; ++c) {
    std::vector<int> touching;
    if (oracle.fiber_count[static_cast<std::size_t>(c)] == 2) {
      touching.push_back(node(c, 0));
      touching.push_back(node(c, 1));
    }
    if (oracle.fiber_count[static_cast<std::size_t>(c) + 1] == 2) {
      touching.push_back(node(c + 1, 0));
      touching.push_back(node(c + 1, 1));
    }
    for (std::size_t t = 1; t < touching.size(); ++t)
      uf_union(parent, touching[0], touching[t]);
    if (touching.empty()) ++isolated;  // critical fiber point with no branches
  }

  // Number the components: representatives of nonempty branch nodes first,
  // then the isolated critical points.
  std::vector<int> rep_id(parent.size(), -1);
  oracle.component_of.assign(static_cast<std::size_t>(k) + 1, {-1, -1});
  int next = 0;
  for (int i = 0; i <= k; ++i) {
    if (oracle.fiber_count[static_cast<std::size_t>(i)] != 2) continue;
    for (int branch = 0; branch < 2; ++branch) {
      const int r = uf_find(parent, node(i, branch));
      if (rep_id[static_cast<std::size_t>(r)] < 0) rep_id[static_cast<std::size_t>(r)] = next++;
      oracle.component_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(branch)] =
          rep_id[static_cast<std::size_t>(r)];
    }
  }
  oracle.count = next + isolated;
  return oracle;
}

}  // namespace testutil
