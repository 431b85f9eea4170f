// Sparse multivariate polynomials over the rationals.
//
// Terms live in a map keyed by exponent vector, so the representation is
// canonical independent of any monomial order; Groebner machinery imposes its
// own term order separately.  The JSON form is the sparse term list
// [[e1,...,eN], "coeff"] sorted by exponent vector.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realdet/interval.hpp"
#include "realdet/monomial.hpp"
#include "realdet/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace realdet {

class UniPoly;

class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly term(Monomial m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Zero polynomial has total degree -1 by convention.
  std::int64_t total_degree() const;
  std::int64_t degree_in(int var) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  MultiPoly pow(int e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  std::string to_string() const;  // with default names x1..xN
  std::string to_string(const std::vector<std::string>& names) const;

  nlohmann::json to_json() const;
  static MultiPoly from_json(const nlohmann::json& j, int nvars);

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

// d/dx_var.
MultiPoly partial_derivative(const MultiPoly& p, int var);

// Substitutes x_i -> replacement[i] for the variables present in the map;
// replacements are polynomials in the same ring.
MultiPoly substitute(const MultiPoly& p,
                     const std::map<int, MultiPoly>& replacements);

// Full substitution into another ring: images[i] is the image of x_i, all
// images share one target ring.  images.size() must equal p.nvars().
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images);

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point);
RationalInterval evaluate_interval(const MultiPoly& p,
                                   const std::vector<RationalInterval>& box);

// Conversion to a dense univariate polynomial; requires every term to be
// supported on the single variable `var` (constants allowed).
UniPoly to_unipoly(const MultiPoly& p, int var);

// Embeds a univariate polynomial as a multivariate one in variable `var`.
MultiPoly from_unipoly(const UniPoly& p, int nvars, int var);

// Resultant of f and g with respect to x_var, computed as the determinant of
// the Sylvester matrix over the remaining variables.  Throws
// PreconditionError if both polynomials have degree < 1 in x_var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

namespace detail {
// Determinant of a square matrix of polynomials by Laplace expansion with
// memoization on column subsets (fraction free, exact).
MultiPoly poly_matrix_determinant(const std::vector<std::vector<MultiPoly>>& a);
}  // namespace detail

}  // namespace realdet
