#include "realdet/rational.hpp"

#include <cctype>
#include <ostream>

#include "realdet/errors.hpp"

namespace realdet {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (sgn(den) == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("malformed rational literal: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("malformed rational literal: '" + text + "'");
  }
  Integer d(den);
  if (sgn(d) == 0) {
    throw ParseError("rational literal with zero denominator: '" + text + "'");
  }
  return Rational(Integer(num), d);
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Integer n = v_.get_num();
  const Integer d = v_.get_den();
  const bool negative = sgn(n) < 0;
  if (negative) n = -n;

  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // floor(|v| * 10^digits) == truncation toward zero of v * 10^digits.
  const Integer scaled = (n * scale) / d;
  const Integer int_part = scaled / scale;
  const Integer frac_part = scaled % scale;

  std::string out = negative && sgn(scaled) != 0 ? "-" : "";
  out += int_part.get_str();
  if (digits > 0) {
    std::string frac = frac_part.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace realdet
