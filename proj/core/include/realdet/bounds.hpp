#ifndef REALDET_BOUNDS_HPP
#define REALDET_BOUNDS_HPP

/// Multilinear Bezout bounds for the critical-point systems.
///
/// delta(m, n; t) bounds the degree of the intermediate varieties cut out by
/// t of the bilinear equations; b(m, n) = sum over the recursion levels of the
/// top-index delta and bounds the total degree of the solver output;
/// complexity_estimate is the exact value of the operation-count expression
/// n^2 m^2 (n+m)^5 binom(n+m, n)^6.

#include <vector>

#include "realdet/rational.hpp"

namespace realdet {

/// delta(m, n; t): a selected-coefficient sum over the factored multidegree
/// expansion of the intermediate system classes.  Writing i, j, l for the
/// s1-exponents drawn from the factors (s1+s2)^m, (s1+s3)^(t-m-...), and the
/// s3-exponent drawn from (s3+s2)^..., the value is
///   t <= m:         sum C(t,i)                over 0 <= i <= min(n, t);
///   m < t <= n+m-1: sum C(m,i) C(t-m,j)       over 1 <= i <= min(m, n),
///                   max(0, t-2m+1) <= j <= min(t-m, i-1);
///   n+m <= t:       sum C(m,i) C(n-1,j) C(r,l), r = t-m-n+1, over
///                   1 <= i <= m, 0 <= j <= n-1, 0 <= l <= r,
///                   max(0, t-2m+1) <= j+l <= n-1,
///                   max(1, t-2m+2) <= i+l <= min(n, t-n+1).
/// The coupling constraints (j < i resp. the i+l window) encode which mixed
/// monomials can appear on a component of maximal dimension; dropping them
/// (plain truncation by (s1^(n+1), s2^m, s3^m)) over-counts and in particular
/// misses delta(m, j; j+2m-2) = 0 for j >= 2m.  Reference implementation:
/// Pascal-triangle factor expansion plus a verbatim test of the inequalities.
/// Throws PreconditionError unless m, n >= 1 and 1 <= t <= n+2m-2.
Integer delta(int m, int n, int t);

/// delta(m, n; t) recomputed from directly evaluated binomials with the
/// admissible region rewritten as solved loop bounds; kept as an independent
/// cross-check of `delta` (exercised exhaustively by the test suite).
Integer delta_closed(int m, int n, int t);

/// The top-index value delta(m, n; n+2m-2) in the dedicated single-sum form
///   sum_{i=0}^{m-1} C(m, n-i) C(n-1, i) C(m-1, i)
/// obtained by linearizing the admissible region at t = n+2m-2 (j+l = n-1,
/// i+l = n, empty when n >= 2m); a third independent cross-check used by the
/// bound aggregation.  Coincides with delta(m, n, n+2m-2) for m >= 2, where
/// the top index lies in the third regime.
Integer delta_top_closed(int m, int n);

/// b(m, n) = sum_{j=1}^{n} delta(m, j; j+2m-2): bound on the total number of
/// complex points encoded by a full run on an m x m pencil in n variables.
Integer b_bound(int m, int n);

/// Operation-count estimate n^2 m^2 (n+m)^5 binom(n+m, n)^6, exact.
Integer complexity_estimate(int m, int n);

/// The full bound table for one (m, n).
struct DegreeBounds {
  int m = 0;
  int n = 0;
  std::vector<Integer> table;  ///< table[t-1] = delta(m, n; t), t = 1..n+2m-2
  Integer b;                   ///< b_bound(m, n)

  static DegreeBounds compute(int m, int n);
};

}  // namespace realdet

#endif  // REALDET_BOUNDS_HPP
