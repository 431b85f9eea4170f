#ifndef REALDET_GROEBNER_HPP
#define REALDET_GROEBNER_HPP

/// Groebner basis engine over the rationals.
///
/// The computation runs internally on primitive integer polynomials
/// (coefficient fractions are cleared once on entry and contents are stripped
/// after every reduction), with Buchberger's algorithm driven by the
/// Gebauer-Moeller pair update rules and the sugar selection strategy.  The
/// result is always the unique reduced, monic basis for the given order.

#include <utility>
#include <vector>

#include "realdet/monomial.hpp"
#include "realdet/multipoly.hpp"
#include "realdet/rng.hpp"

namespace realdet {

/// A reduced Groebner basis together with the order it was computed for.
///
/// Invariants: every element is monic, no monomial of any element is
/// divisible by the leading monomial of another element, and the elements
/// are sorted by increasing leading monomial.  The zero ideal is represented
/// by an empty `polys` vector.
struct GroebnerBasis {
  MonomialOrder order;
  int nvars = 0;
  std::vector<MultiPoly> polys;

  /// True when the basis is {1}, i.e. the ideal is the whole ring and the
  /// variety is empty.
  bool is_trivial() const;

  /// Leading monomials of the basis elements, in basis order.
  std::vector<Monomial> leading_monomials() const;
};

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
/// Zero generators are ignored; an empty or all-zero generating set yields
/// the empty basis (the zero ideal).  As soon as a unit shows up in the ideal
/// the computation stops and returns the basis {1}; this shortcut is exact
/// and saves substantial work on the singularity certificates, which are
/// trivial for generic input.
GroebnerBasis groebner_basis(const std::vector<MultiPoly>& gens,
                             const MonomialOrder& order);

/// Remainder of `p` on division by the basis: the unique normal form with no
/// monomial divisible by any leading monomial of the basis.  `p` is congruent
/// to the result modulo the ideal, so the result is zero exactly when `p`
/// lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

/// True when 1 lies in the ideal generated by `gens` (empty variety).
/// Equivalent to `groebner_basis(gens, order, {stop_on_unit}).is_trivial()`.
bool ideal_is_trivial(const std::vector<MultiPoly>& gens,
                      const MonomialOrder& order);

/// Krull dimension of R/I computed combinatorially from the staircase: the
/// largest cardinality of a set S of variables such that no leading monomial
/// is supported inside S.  For a degree-compatible order (deg-rev-lex here)
/// this equals the dimension of the affine variety of I.  Returns -1 for the
/// trivial ideal and `nvars` for the zero ideal.
int staircase_dimension(const GroebnerBasis& gb);

/// True when the quotient ring is a finite-dimensional vector space, i.e.
/// every variable has a pure power among the leading monomials.  The trivial
/// ideal counts as zero-dimensional (degree 0).
bool is_zero_dimensional(const GroebnerBasis& gb);

/// The monomials outside the leading-term ideal, sorted ascending.  They form
/// a vector-space basis of the quotient ring.  Throws PreconditionError when
/// the ideal is not zero-dimensional (the set would be infinite).
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Number of standard monomials: the dimension of the quotient ring as a
/// vector space, which counts the solutions with multiplicity.  Throws
/// PreconditionError when the ideal is not zero-dimensional.
long zero_dim_degree(const GroebnerBasis& gb);

struct DimensionDegree {
  int dim = 0;     ///< -1 when the variety is empty.
  long degree = 0; ///< degree of the variety (0 when empty).
};

/// Dimension and degree of the variety of `gens`.  The dimension is read off
/// the deg-rev-lex staircase; the degree of a positive-dimensional variety is
/// obtained by cutting with `dim` random affine hyperplanes and counting the
/// finitely many intersection points.  Unlucky hyperplane draws (empty or
/// still positive-dimensional sections) are redrawn up to `retries` times
/// before RetryExhausted is thrown.
DimensionDegree dim_degree_via_slicing(const std::vector<MultiPoly>& gens,
                                     Rng& rng, int retries = 16);

}  // namespace realdet

#endif  // REALDET_GROEBNER_HPP
