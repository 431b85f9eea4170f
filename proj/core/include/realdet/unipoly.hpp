// Dense univariate polynomials over the rationals, with the real-root
// toolkit: gcd, squarefree part, Sturm sequences, certified root isolation
// and interval refinement.
#pragma once

#include <string>
#include <vector>

#include "realdet/interval.hpp"
#include "realdet/rational.hpp"

namespace realdet {

class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  // Coefficients in ascending degree order; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c);
  // c * t^e
  static UniPoly monomial(const Rational& c, int e);
  // The identity polynomial t.
  static UniPoly t() { return monomial(Rational(1), 1); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size())
               ? c_[static_cast<std::size_t>(i)]
               : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading_coeff() const {
    return c_.empty() ? Rational(0) : c_.back();
  }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  Rational operator()(const Rational& x) const;  // Horner
  RationalInterval operator()(const RationalInterval& x) const;
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  UniPoly derivative() const;

  // Integer content together with the denominator lcm: returns the positive
  // rational c such that (*this) / c has coprime integer coefficients.
  // Content of the zero polynomial is 1.
  Rational content() const;
  // Primitive part with positive leading coefficient.
  UniPoly primitive() const;
  UniPoly monic() const;

  std::string to_string(const std::string& varname = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Euclidean division: returns (quotient, remainder).  Divisor must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
// Exact division; throws PreconditionError if the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
UniPoly univ_gcd(const UniPoly& a, const UniPoly& b);

// Product of the distinct irreducible factors: p / gcd(p, p'), returned
// primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

// Sturm sequence of p (content-normalized signed remainder sequence).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Number of distinct real roots of squarefree p in the half-open interval
// (a, b].  Requires a <= b.
int sturm_root_count(const std::vector<UniPoly>& chain, const Rational& a,
                     const Rational& b);

// Isolating intervals for all real roots of squarefree p, sorted increasingly.
// Each returned interval either is a point [r, r] with p(r) == 0 exactly, or
// has rational non-root endpoints and contains exactly one root in its
// interior.  Intervals are pairwise disjoint.  Throws PreconditionError if p
// is zero, and if p is not squarefree.
std::vector<RationalInterval> sturm_isolate(const UniPoly& p);

// Shrinks an isolating interval to width <= target_width by exact bisection.
// The input must isolate exactly one root of squarefree p (point intervals
// are returned unchanged after validation).  Throws PreconditionError when
// sign evaluation disproves the precondition.
RationalInterval refine_root(const UniPoly& p, const RationalInterval& iv,
                             const Rational& target_width);

}  // namespace realdet
