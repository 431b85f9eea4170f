// Monomials (exponent vectors) and monomial orders.
//
// A Monomial is an exponent vector of fixed length nvars.  Orders are value
// objects: lexicographic, degree reverse lexicographic, and block elimination
// orders (degrevlex within each of two blocks, first block dominant), which
// is what elimination of a leading variable block needs.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace realdet {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  std::int32_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  std::int32_t& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int32_t>& exponents() const { return e_; }

  std::int64_t degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
  }
  bool is_one() const {
    for (auto v : e_) if (v != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }
  // Requires this->divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r = o;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
    }
    return r;
  }
  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
  // Plain lexicographic compare of exponent vectors; used only as a canonical
  // container key, not as an algebraic monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.e_ < b.e_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<std::int32_t> e_;
};

class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex(int nvars) { return {Kind::Lex, nvars, 0}; }
  static MonomialOrder degrevlex(int nvars) {
    return {Kind::DegRevLex, nvars, 0};
  }
  // Eliminates the first `front` variables: degrevlex on them dominates,
  // degrevlex on the remaining variables breaks ties.
  static MonomialOrder block(int nvars, int front) {
    return {Kind::Block, nvars, front};
  }

  Kind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int front_block() const { return front_; }

  // Three-way compare in the order sense: negative when a comes before
  // (is smaller than) b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.front_ == b.front_;
  }

 private:
  MonomialOrder(Kind kind, int nvars, int front)
      : kind_(kind), nvars_(nvars), front_(front) {}
  Kind kind_;
  int nvars_;
  int front_;
};

// Default print names x1..xN, used when no block naming is available.
std::vector<std::string> default_names(int nvars);

}  // namespace realdet
