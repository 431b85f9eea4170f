#ifndef REALDET_PARAMETRIZATION_HPP
#define REALDET_PARAMETRIZATION_HPP

/// Rational parametrizations of finite algebraic sets and the operations the
/// recursion needs on them: coordinate projection, linear images, unions,
/// lifts, certified real-point extraction, and exact membership verification
/// against a determinant.

#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "realdet/interval.hpp"
#include "realdet/linear_matrix.hpp"
#include "realdet/rational.hpp"
#include "realdet/unipoly.hpp"

namespace realdet {

/// A finite algebraic set encoded as
///     { (q[0](t)/q0(t), ..., q[N-1](t)/q0(t)) : qlast(t) = 0 }.
///
/// Invariants: qlast is squarefree, primitive, with positive leading
/// coefficient, and gcd(q0, qlast) is a nonzero constant (so every coordinate
/// is well defined at every root).  qlast = 1 encodes the empty set.  The
/// degree of the parametrization is deg qlast.
struct RationalParametrization {
  int ncoords = 0;  ///< N: number of coordinates.
  UniPoly q0 = UniPoly::constant(Rational(1));
  std::vector<UniPoly> q;  ///< N coordinate numerators.
  UniPoly qlast = UniPoly::constant(Rational(1));

  int degree() const { return qlast.degree(); }
  bool empty() const { return qlast.degree() == 0; }

  /// Checks the structural invariants; throws PreconditionError on violation.
  void validate() const;

  nlohmann::json to_json() const;
  static RationalParametrization from_json(const nlohmann::json& j);
};

/// A finite union of parametrizations over a common coordinate count.  No
/// deduplication is performed across items.
struct SampleSet {
  std::vector<RationalParametrization> items;

  /// Common coordinate count (-1 when the set has no items).
  int ncoords() const { return items.empty() ? -1 : items.front().ncoords; }

  /// Sum of deg qlast over the items: the total number of encoded points
  /// counted over the complex numbers.
  long degree_sum() const;

  nlohmann::json to_json() const;
  static SampleSet from_json(const nlohmann::json& j);
};

/// A certified real point of a parametrization: `t_interval` isolates one
/// real root t* of qlast, and `box` contains the exact algebraic point
/// (q[i](t*)/q0(t*)) componentwise.
struct RealPointBox {
  RationalInterval t_interval;
  std::vector<RationalInterval> box;
  /// Index of the parametrization this point came from, within the SampleSet
  /// handed to extract_real_points (0 for the single-parametrization
  /// overload).
  int item = 0;
};

/// Restricts the parametrization to the coordinates listed in `keep`
/// (zero-based, any order, duplicates allowed).  q0 and qlast are unchanged;
/// the point set maps onto the projection.  Throws PreconditionError when
/// `keep` is empty or contains an out-of-range index.
RationalParametrization project(const RationalParametrization& rp,
                                const std::vector<int>& keep);

/// Applies the invertible linear map `w` to the point set: coordinate
/// numerators are replaced by w * q.  Throws PreconditionError on dimension
/// mismatch or when w is singular.
RationalParametrization image(const RationalParametrization& rp,
                              const RationalMatrix& w);

/// Union of two sample sets (list concatenation; equal coordinate counts
/// required unless one side is empty).
SampleSet sample_union(SampleSet a, SampleSet b);

/// Inserts a constant coordinate with value t0 before position `position`
/// (zero-based, 0..N).  The new coordinate's numerator is t0 * q0, so it
/// evaluates to t0 at every root.
RationalParametrization lift(const RationalParametrization& rp,
                             const Rational& t0, int position);

/// Isolates every real root of qlast and returns one certified box per root.
/// Each t-interval is refined until the interval evaluation of q0 excludes
/// zero and every coordinate interval is narrower than 10^-digits.  Exact
/// rational roots yield exact point boxes.  Throws RefinementError when the
/// refinement budget is exhausted.
std::vector<RealPointBox> extract_real_points(const RationalParametrization& rp,
                                              int digits);

/// extract_real_points over every item of a sample set, with `item` indices
/// filled in.
std::vector<RealPointBox> extract_real_points(const SampleSet& s, int digits);

/// Substitutes the parametrization into `g` (a polynomial in N variables) and
/// returns the numerator q0^deg(g) * g(q/q0) reduced modulo qlast.  The
/// parametrization solves g exactly when the result is zero.
UniPoly substitute_parametrization(const RationalParametrization& rp,
                                   const MultiPoly& g);

/// True iff qlast divides the numerator of det A(q/q0): every encoded point
/// lies on the determinantal hypersurface of A.  Requires N = A.n.  The empty
/// parametrization verifies trivially.
bool verify_on_determinant(const RationalParametrization& rp,
                           const LinearMatrix& a);

}  // namespace realdet

#endif  // REALDET_PARAMETRIZATION_HPP
