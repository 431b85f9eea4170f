#include "realdet/unipoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "realdet/errors.hpp"

namespace realdet {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
  return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, int e) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, Rational(0));
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational r(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * x + c_[i];
  }
  return r;
}

RationalInterval UniPoly::operator()(const RationalInterval& x) const {
  RationalInterval r{Rational(0)};
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * x + RationalInterval{c_[i]};
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  }
  return UniPoly(std::move(out));
}

Rational UniPoly::content() const {
  if (is_zero()) return Rational(1);
  Integer den_lcm = 1;
  for (const auto& c : c_) {
    if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    const Integer scaled_num = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (leading_coeff().sign() < 0) c = -c;
  UniPoly r = *this;
  for (auto& x : r.c_) x /= c;
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const Rational lc = leading_coeff();
  for (auto& x : r.c_) x /= lc;
  return r;
}

std::string UniPoly::to_string(const std::string& varname) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational ac = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << ac.to_string();
    } else {
      if (ac != Rational(1)) os << ac.to_string() << "*";
      os << varname;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("univariate division by zero polynomial");
  UniPoly rem = a;
  const int db = b.degree();
  const Rational lead = b.leading_coeff();
  std::vector<Rational> q(
      static_cast<std::size_t>(std::max(0, rem.degree() - db + 1)), Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Rational factor = rem.leading_coeff() / lead;
    q[static_cast<std::size_t>(shift)] = factor;
    rem -= UniPoly::monomial(factor, shift) * b;
  }
  return {UniPoly(std::move(q)), rem};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw PreconditionError("exact_div: division is not exact");
  return q;
}

UniPoly univ_gcd(const UniPoly& a, const UniPoly& b) {
  // Euclid with primitive normalization after every step to keep coefficient
  // growth near subresultant size.
  UniPoly p = a.primitive();
  UniPoly q = b.primitive();
  while (!q.is_zero()) {
    UniPoly r = divrem(p, q).second.primitive();
    p = std::move(q);
    q = std::move(r);
  }
  return p.primitive();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree part of zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rational(1));
  const UniPoly g = univ_gcd(p, p.derivative());
  return exact_div(p.primitive(), g).primitive();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return univ_gcd(p, p.derivative()).degree() == 0;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p.primitive());
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative().primitive());
  while (chain.back().degree() > 0) {
    UniPoly r = -divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Normalize by the positive content only: scaling a Sturm chain member by
    // a positive constant preserves all sign variations.
    r *= Rational(1) / r.content();
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& f : chain) {
    const int s = f.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int sturm_root_count(const std::vector<UniPoly>& chain, const Rational& a,
                     const Rational& b) {
  if (b < a) throw PreconditionError("sturm_root_count: empty interval");
  // V is right-continuous and drops by one at every real root of chain[0], so
  // V(a) - V(b) counts roots in the half-open interval (a, b].
  return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

// Cauchy bound: every real root r satisfies |r| < 1 + max |c_i| / |c_d|.
Rational cauchy_root_bound(const UniPoly& p) {
  const Rational lead = p.leading_coeff().abs();
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    m = max(m, p.coeff(i).abs());
  }
  return Rational(1) + m / lead;
}

struct Isolator {
  const UniPoly& p;
  std::vector<UniPoly> chain;
  std::vector<RationalInterval> out;

  void isolate_cell(const Rational& a, const Rational& b, int va, int vb) {
    const int k = va - vb;  // roots in (a, b]
    if (k <= 0) return;
    if (k == 1) {
      if (p.sign_at(b) == 0) {
        out.emplace_back(b);  // the unique root of the cell is b itself
        return;
      }
      if (p.sign_at(a) != 0) {
        out.emplace_back(a, b);
        return;
      }
      // a is an exact root emitted by an enclosing cell; shrink away from it.
      const Rational c = (a + b) / Rational(2);
      if (p.sign_at(c) == 0) {
        out.emplace_back(c);
        return;
      }
      const int vc = sign_variations(chain, c);
      if (va - vc == 1) {
        isolate_cell(a, c, va, vc);
      } else {
        isolate_cell(c, b, vc, vb);
      }
      return;
    }
    const Rational c = (a + b) / Rational(2);
    const int vc = sign_variations(chain, c);
    isolate_cell(a, c, va, vc);
    isolate_cell(c, b, vc, vb);
  }

  // Shrinks [a, e] (one interior root, both endpoints non-roots) until its
  // right endpoint drops strictly below e.  Used to separate cells that share
  // an endpoint so the returned intervals are pairwise disjoint.
  RationalInterval shrink_right(RationalInterval iv) {
    const int sa = p.sign_at(iv.lo());
    Rational a = iv.lo();
    Rational e = iv.hi();
    for (;;) {
      const Rational m = (a + e) / Rational(2);
      const int sm = p.sign_at(m);
      if (sm == 0) return RationalInterval(m);
      if (sm != sa) return {a, m};
      a = m;
    }
  }
};

}  // namespace

std::vector<RationalInterval> sturm_isolate(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("sturm_isolate: zero polynomial");
  if (!is_squarefree(p)) {
    throw PreconditionError("sturm_isolate: input must be squarefree");
  }
  if (p.degree() == 0) return {};

  Isolator iso{p, sturm_sequence(p), {}};
  const Rational bound = cauchy_root_bound(p);
  const int va = sign_variations(iso.chain, -bound);
  const int vb = sign_variations(iso.chain, bound);
  iso.isolate_cell(-bound, bound, va, vb);

  // Bisection emits cells in increasing order; adjacent closed cells may
  // still share a single (non-root) endpoint.
  for (std::size_t i = 0; i + 1 < iso.out.size(); ++i) {
    if (iso.out[i].hi() == iso.out[i + 1].lo()) {
      iso.out[i] = iso.shrink_right(iso.out[i]);
    }
  }
  return iso.out;
}

RationalInterval refine_root(const UniPoly& p, const RationalInterval& iv,
                             const Rational& target_width) {
  if (target_width.sign() <= 0) {
    throw PreconditionError("refine_root: target width must be positive");
  }
  if (iv.is_point()) {
    if (p.sign_at(iv.lo()) != 0) {
      throw PreconditionError("refine_root: point interval is not a root");
    }
    return iv;
  }
  Rational lo = iv.lo();
  Rational hi = iv.hi();
  const int slo = p.sign_at(lo);
  int shi = p.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw PreconditionError("refine_root: interval does not isolate a simple root");
  }
  while (hi - lo > target_width) {
    const Rational m = (lo + hi) / Rational(2);
    const int sm = p.sign_at(m);
    if (sm == 0) return RationalInterval(m);
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return {lo, hi};
}

}  // namespace realdet
