// Tests for the multilinear Bezout bound tables.  The small anchor values
// asserted here were expanded by hand from the coefficient-sum definition
// (see the notes in bounds.hpp); the two closed forms and the aggregated
// b-values then have to agree with each other and with those anchors.
#include "doctest.h"

#include "realdet/bounds.hpp"
#include "realdet/errors.hpp"

using realdet::Integer;

TEST_CASE("hand-expanded delta values") {
  // m = 2, n = 2: t ranges over 1..4, one value per regime boundary.
  CHECK(realdet::delta(2, 2, 1) == 2);  // sum C(1,i), i = 0..1
  CHECK(realdet::delta(2, 2, 2) == 4);  // sum C(2,i), i = 0..2
  CHECK(realdet::delta(2, 2, 3) == 4);  // middle regime: 2 + 2
  CHECK(realdet::delta(2, 2, 4) == 3);  // top regime: 1 + 2

  // m = 2, n = 1, t = 3 (top index of the first recursion level).
  CHECK(realdet::delta(2, 1, 3) == 2);
  // m = 2, n = 3, t = 5 = n + m: single admissible triple (i,j,l) = (2,1,1).
  CHECK(realdet::delta(2, 3, 5) == 2);

  // m = 1: only the first level contributes; delta(1, j; j) = 0 for j >= 2.
  CHECK(realdet::delta(1, 1, 1) == 2);
  for (int j = 2; j <= 6; ++j) CHECK(realdet::delta(1, j, j) == 0);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(realdet::delta(0, 2, 1), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::delta(2, 0, 1), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::delta(2, 2, 0), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::delta(2, 2, 5), realdet::PreconditionError);  // t > n+2m-2
  CHECK_THROWS_AS(realdet::delta_closed(2, 2, 5), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::b_bound(0, 1), realdet::PreconditionError);
  CHECK_THROWS_AS(realdet::complexity_estimate(1, 0), realdet::PreconditionError);
}

TEST_CASE("the two delta implementations agree on a small grid") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int t = 1; t <= n + 2 * m - 2; ++t)
        CHECK(realdet::delta(m, n, t) == realdet::delta_closed(m, n, t));
}

TEST_CASE("single-sum top-index form") {
  // delta_top_closed(m, n) = sum_i C(m, n-i) C(n-1, i) C(m-1, i) coincides
  // with delta at the top index for m >= 2; for m = 1 the top index t = n
  // falls outside the third regime, so the single-sum form differs there.
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      CHECK(realdet::delta_top_closed(m, n) ==
            realdet::delta(m, n, n + 2 * m - 2));
  CHECK(realdet::delta_top_closed(2, 2) == 3);
}

TEST_CASE("aggregated bound values") {
  CHECK(realdet::b_bound(2, 2) == 5);
  CHECK(realdet::b_bound(2, 3) == 7);
  // One matrix size up, still hand-checkable through the table struct.
  realdet::DegreeBounds db = realdet::DegreeBounds::compute(2, 3);
  CHECK(db.m == 2);
  CHECK(db.n == 3);
  REQUIRE(db.table.size() == 5);  // t = 1..n+2m-2
  for (int t = 1; t <= 5; ++t) CHECK(db.table[t - 1] == realdet::delta(2, 3, t));
  CHECK(db.b == realdet::b_bound(2, 3));

  // b(1, n) = 2 for every n: only the first level contributes.
  for (int n = 1; n <= 8; ++n) CHECK(realdet::b_bound(1, n) == 2);

  // b is a sum of per-level top deltas, so it is monotone in n.
  Integer prev = 0;
  for (int n = 1; n <= 8; ++n) {
    Integer cur = realdet::b_bound(3, n);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("complexity estimate anchors") {
  // n^2 m^2 (n+m)^5 binom(n+m, n)^6 at two hand-evaluated points:
  // (1,1): 1*1*2^5*2^6 = 2048; (2,2): 4*4*4^5*6^6 = 764411904.
  CHECK(realdet::complexity_estimate(1, 1) == 2048);
  CHECK(realdet::complexity_estimate(2, 2) == 764411904L);
  // Exactness beyond 64 bits.
  Integer big = realdet::complexity_estimate(8, 8);
  CHECK(big > 0);
  CHECK(realdet::complexity_estimate(8, 8) ==
        Integer(64) * 64 * Integer(16) * 16 * 16 * 16 * 16 *
            Integer(12870) * 12870 * 12870 * Integer(12870) * 12870 * 12870);
}
