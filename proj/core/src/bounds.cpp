#include "realdet/bounds.hpp"

#include <algorithm>

#include "realdet/errors.hpp"

namespace realdet {

namespace {

Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Row d of Pascal's triangle, computed by the additive recurrence only (the
// reference path deliberately avoids the direct binomial routine used by the
// closed forms).
std::vector<Integer> pascal_row(int d) {
  std::vector<Integer> row{Integer(1)};
  for (int k = 1; k <= d; ++k) {
    std::vector<Integer> next(static_cast<std::size_t>(k) + 1, Integer(0));
    for (int i = 0; i < k; ++i) {
      next[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i) + 1] += row[static_cast<std::size_t>(i)];
    }
    row = std::move(next);
  }
  return row;
}

void check_mn(int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("bounds: require m >= 1 and n >= 1");
}

void check_t(int m, int n, int t) {
  if (t < 1 || t > n + 2 * m - 2) {
    throw PreconditionError("bounds: t out of range 1..n+2m-2");
  }
}

}  // namespace

Integer delta(int m, int n, int t) {
  check_mn(m, n);
  check_t(m, n, t);
  Integer total(0);
  if (t <= m) {
    const auto row = pascal_row(t);
    for (int i = 0; i <= t; ++i) {
      if (i <= n) total += row[static_cast<std::size_t>(i)];
    }
  } else if (t <= n + m - 1) {
    const auto rowm = pascal_row(m);
    const auto rows = pascal_row(t - m);
    for (int i = 1; i <= m; ++i) {
      for (int j = 0; j <= t - m; ++j) {
        if (i > std::min(m, n)) continue;
        if (j < std::max(0, t - 2 * m + 1) || j > std::min(t - m, i - 1)) continue;
        total += rowm[static_cast<std::size_t>(i)] * rows[static_cast<std::size_t>(j)];
      }
    }
  } else {
    const int r = t - m - n + 1;
    const auto rowm = pascal_row(m);
    const auto rown = pascal_row(n - 1);
    const auto rowr = pascal_row(r);
    for (int i = 1; i <= m; ++i) {
      for (int j = 0; j <= n - 1; ++j) {
        for (int l = 0; l <= r; ++l) {
          if (j + l < std::max(0, t - 2 * m + 1) || j + l > n - 1) continue;
          if (i + l < std::max(1, t - 2 * m + 2)) continue;
          if (i + l > std::min(n, t - n + 1)) continue;
          total += rowm[static_cast<std::size_t>(i)] *
                   rown[static_cast<std::size_t>(j)] *
                   rowr[static_cast<std::size_t>(l)];
        }
      }
    }
  }
  return total;
}

Integer delta_closed(int m, int n, int t) {
  check_mn(m, n);
  check_t(m, n, t);
  Integer total(0);
  if (t <= m) {
    const int hi = std::min(n, t);
    for (int i = 0; i <= hi; ++i) total += binom(t, i);
  } else if (t <= n + m - 1) {
    const int ihi = std::min(m, n);
    const int jlo = std::max(0, t - 2 * m + 1);
    for (int i = 1; i <= ihi; ++i) {
      const int jhi = std::min(t - m, i - 1);
      for (int j = jlo; j <= jhi; ++j) total += binom(m, i) * binom(t - m, j);
    }
  } else {
    const int r = t - m - n + 1;
    const int sumlo = std::max(0, t - 2 * m + 1);   // bounds on j+l
    const int winlo = std::max(1, t - 2 * m + 2);   // bounds on i+l
    const int winhi = std::min(n, t - n + 1);
    for (int l = 0; l <= r; ++l) {
      const int jlo = std::max(0, sumlo - l);
      const int jhi = n - 1 - l;
      const int ilo = std::max(1, winlo - l);
      const int ihi = std::min(m, winhi - l);
      if (jlo > jhi || ilo > ihi) continue;
      Integer jsum(0);
      for (int j = jlo; j <= jhi; ++j) jsum += binom(n - 1, j);
      Integer isum(0);
      for (int i = ilo; i <= ihi; ++i) isum += binom(m, i);
      total += isum * jsum * binom(r, l);
    }
  }
  return total;
}

Integer delta_top_closed(int m, int n) {
  check_mn(m, n);
  Integer total(0);
  for (int i = 0; i <= m - 1; ++i) {
    total += binom(m, n - i) * binom(n - 1, i) * binom(m - 1, i);
  }
  return total;
}

Integer b_bound(int m, int n) {
  check_mn(m, n);
  Integer total(0);
  for (int j = 1; j <= n; ++j) total += delta(m, j, j + 2 * m - 2);
  return total;
}

Integer complexity_estimate(int m, int n) {
  check_mn(m, n);
  Integer base = Integer(n) * n * m * m;
  Integer s(1);
  for (int i = 0; i < 5; ++i) s *= Integer(n + m);
  Integer c = binom(n + m, n);
  Integer c6 = c * c * c;
  c6 *= c6;
  return base * s * c6;
}

DegreeBounds DegreeBounds::compute(int m, int n) {
  check_mn(m, n);
  DegreeBounds out;
  out.m = m;
  out.n = n;
  for (int t = 1; t <= n + 2 * m - 2; ++t) out.table.push_back(delta(m, n, t));
  out.b = b_bound(m, n);
  return out;
}

}  // namespace realdet
