// Exact interval arithmetic over the rationals.
//
// Intervals are closed: [lo, hi] with lo <= hi.  All operations return the
// exact image hull, so enclosure is an invariant, not an approximation: for
// every x in a and y in b, x op y lies in (a op b).  Division requires the
// denominator interval to exclude zero.
#pragma once

#include "realdet/rational.hpp"

#include <string>

namespace realdet {

class RationalInterval {
 public:
  RationalInterval() : lo_(0), hi_(0) {}
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return contains(Rational(0)); }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const RationalInterval& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }

  // Constant sign over the whole interval: -1, +1, or 0 when the interval
  // straddles (or touches) zero.
  int sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    return 0;
  }

  RationalInterval operator-() const { return {-hi_, -lo_}; }

  friend RationalInterval operator+(const RationalInterval& a,
                                    const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RationalInterval operator-(const RationalInterval& a,
                                    const RationalInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend RationalInterval operator*(const RationalInterval& a,
                                    const RationalInterval& b);
  // Throws PreconditionError if b contains zero.
  friend RationalInterval operator/(const RationalInterval& a,
                                    const RationalInterval& b);

  std::string to_string() const {
    return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
  }

 private:
  Rational lo_, hi_;
};

}  // namespace realdet
