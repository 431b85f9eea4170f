#ifndef REALDET_RATPAR_HPP
#define REALDET_RATPAR_HPP

/// Conversion of zero-dimensional polynomial systems to rational
/// parametrizations.
///
/// Strategy: compute a deg-rev-lex Groebner basis and the standard-monomial
/// basis of the quotient ring, then take a candidate separating linear form
/// l and build its Krylov sequence 1, l, l^2, ... from the coset of 1.  The
/// minimal polynomial mu of that sequence generates the eliminant ideal
/// I ∩ Q[l]; when deg mu equals the quotient dimension and mu is squarefree,
/// the ideal is radical and in shape position for l, and every coordinate is
/// solved as a polynomial in l inside the Krylov basis.  Otherwise the ideal
/// is radicalized by adjoining the squarefree parts of the per-variable
/// eliminants (after which a generic form separates), and fresh forms are
/// drawn up to a retry cap.

#include "realdet/groebner.hpp"
#include "realdet/parametrization.hpp"
#include "realdet/rng.hpp"

namespace realdet {

/// Rational parametrization of the (radical of the) zero-dimensional ideal
/// generated by `gens`.  All nvars coordinates are parametrized, q0 = 1, and
/// the result satisfies the divisibility check substitute_parametrization
/// (g, rp) = 0 for every generator g (verified internally).  The trivial
/// ideal yields the empty parametrization.  Throws PreconditionError when the
/// ideal is positive-dimensional and RetryExhausted when no separating form
/// is found within `max_retries` draws.
RationalParametrization rat_par(const std::vector<MultiPoly>& gens, Rng& rng,
                                int max_retries = 16);

/// Same, starting from an already computed deg-rev-lex Groebner basis.  The
/// `gens` used for the internal divisibility verification are the basis
/// elements themselves.
RationalParametrization rat_par(const GroebnerBasis& gb, Rng& rng,
                                int max_retries = 16);

}  // namespace realdet

#endif  // REALDET_RATPAR_HPP
