// Linear matrices (pencils) A(x) = A0 + x1*A1 + ... + xn*An with rational
// coefficient matrices, and the polynomial systems built from them:
//
//   incidence system  (A(x)y, u1*y1 + ... + um*ym - u_{m+1})
//   fiber system      incidence + (x1 - t0)
//   Lagrange system   (A(Mx)y, u'(y,-1), J(x,y)'z, v'z - 1)
//
// where J is the Jacobian of the incidence system of A∘M with the x1 column
// removed.  Variable order is global and fixed: x block, then y block, then
// z block.
#pragma once

#include <string>
#include <vector>

#include "realdet/multipoly.hpp"
#include "realdet/rational.hpp"
#include "realdet/rng.hpp"

#include <nlohmann/json_fwd.hpp>

namespace realdet {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Determinant and inverse of a square rational matrix (fraction-free Gauss).
Rational rational_matrix_det(const RationalMatrix& a);
// Throws PreconditionError when singular.
RationalMatrix rational_matrix_inverse(const RationalMatrix& a);

struct LinearMatrix {
  int m = 0;  // matrix size
  int n = 0;  // number of variables
  // A[0] is the constant matrix, A[k] the coefficient of x_k; n+1 matrices,
  // each m x m.
  std::vector<RationalMatrix> A;

  nlohmann::json to_json() const;
  static LinearMatrix from_json(const nlohmann::json& j);
  // Validates shape invariants; throws ParseError.
  void validate() const;
};

// det A(x) as a polynomial in n variables.
MultiPoly determinant(const LinearMatrix& a);

// B with B(x) = A(Mx); M must be n x n.
LinearMatrix change_of_variables(const LinearMatrix& a, const RationalMatrix& m);

// The (n-1)-variable pencil A(t0, x2, ..., xn); requires n >= 2.
LinearMatrix substitute_x1(const LinearMatrix& a, const Rational& t0);

// A polynomial system with declared variable blocks.  Block names follow the
// global convention: x1..xn, y1..ym, z1..z_{m+1}.
struct PolySystem {
  int nvars = 0;
  std::vector<int> blocks;  // sizes; sum == nvars
  std::vector<MultiPoly> polys;
  std::vector<std::string> names;
};

// u has m+1 entries; u_{m+1} (the affine normalization constant) must be
// nonzero and (u1..um) must be a nonzero vector.
PolySystem incidence_system(const LinearMatrix& a, const std::vector<Rational>& u);

PolySystem fiber_system(const LinearMatrix& a, const std::vector<Rational>& u,
                        const Rational& t0);

// The square critical-point system of the projection onto x1 restricted to
// the incidence variety of A∘M: n+2m+1 polynomials in n+2m+1 variables.
// Requires n >= 2 (with n == 1 there is no variable left to be critical in).
PolySystem lagrange_system(const LinearMatrix& a, const RationalMatrix& m,
                           const std::vector<Rational>& u,
                           const std::vector<Rational>& v);

// Jacobian matrix d(polys_i)/d(x_{vars_j}).
std::vector<std::vector<MultiPoly>> jacobian_matrix(
    const std::vector<MultiPoly>& polys, const std::vector<int>& vars);

// Random data for one recursion level.  Entries are integers drawn uniformly
// from [-bound, bound]; each component is resampled until its invariant holds
// (M invertible, u_{m+1} != 0 and (u1..um) != 0, v != 0).
struct RandomDraw {
  RationalMatrix M;         // n x n, invertible
  std::vector<Rational> u;  // m+1
  std::vector<Rational> v;  // m+1
  Rational t0;

  static RandomDraw draw(int m, int n, long bound, Rng& rng);
};

// Random pencil with integer entries uniform in [-bound, bound].
LinearMatrix random_pencil(int m, int n, long bound, Rng& rng);

}  // namespace realdet
