#include "realdet/interval.hpp"

#include "realdet/errors.hpp"

namespace realdet {

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw PreconditionError("interval with lo > hi");
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p1 = a.lo_ * b.lo_;
  const Rational p2 = a.lo_ * b.hi_;
  const Rational p3 = a.hi_ * b.lo_;
  const Rational p4 = a.hi_ * b.hi_;
  return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains_zero()) {
    throw PreconditionError("interval division by interval containing zero");
  }
  const Rational inv_lo = Rational(1) / b.hi_;
  const Rational inv_hi = Rational(1) / b.lo_;
  return a * RationalInterval(inv_lo, inv_hi);
}

}  // namespace realdet
