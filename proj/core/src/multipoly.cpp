#include "realdet/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "realdet/errors.hpp"
#include "realdet/unipoly.hpp"

namespace realdet {

// ---------------------------------------------------------------------------
// Monomial / MonomialOrder
// ---------------------------------------------------------------------------

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e_[i] != 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Degrevlex three-way compare restricted to positions [from, to).
int degrevlex_compare_range(const Monomial& a, const Monomial& b, int from,
                            int to) {
  std::int64_t da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial with the larger exponent in the *last*
  // position where they differ is the smaller one.
  for (int i = to - 1; i >= from; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_compare_range(const Monomial& a, const Monomial& b, int from, int to) {
  for (int i = from; i < to; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare_range(a, b, 0, nvars_);
    case Kind::DegRevLex:
      return degrevlex_compare_range(a, b, 0, nvars_);
    case Kind::Block: {
      const int c = degrevlex_compare_range(a, b, 0, front_);
      if (c != 0) return c;
      return degrevlex_compare_range(a, b, front_, nvars_);
    }
  }
  return 0;
}

std::vector<std::string> default_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars));
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw PreconditionError("variable index out of range");
  }
  Monomial m(nvars);
  m[index] = 1;
  MultiPoly p(nvars);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(Monomial m, const Rational& c) {
  MultiPoly p(m.nvars());
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::int64_t MultiPoly::total_degree() const {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::int64_t MultiPoly::degree_in(int var) const {
  std::int64_t d = is_zero() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m[var]);
  return d;
}

Rational MultiPoly::constant_term() const { return coeff(Monomial(nvars_)); }

Rational MultiPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, const Rational& c) {
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative polynomial power");
  MultiPoly result = MultiPoly::constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  return to_string(default_names(nvars_));
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Print higher-degree terms first (degrevlex descending) for readability.
  std::vector<const std::pair<const Monomial, Rational>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  const MonomialOrder ord = MonomialOrder::degrevlex(nvars_);
  std::sort(ordered.begin(), ordered.end(),
            [&](const auto* a, const auto* b) {
              return ord.compare(a->first, b->first) > 0;
            });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ordered) {
    const Rational& c = t->second;
    const Rational ac = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (t->first.is_one()) {
      os << ac.to_string();
    } else {
      if (ac != Rational(1)) os << ac.to_string() << "*";
      os << t->first.to_string(names);
    }
  }
  return os.str();
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    terms.push_back({m.exponents(), c.to_string()});
  }
  return terms;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j, int nvars) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be a term array");
  MultiPoly p(nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array()) {
      throw ParseError("polynomial term must be [[exponents], coeff]");
    }
    if (static_cast<int>(term[0].size()) != nvars) {
      throw ParseError("polynomial term exponent vector has wrong length");
    }
    std::vector<std::int32_t> exps;
    for (const auto& e : term[0]) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw ParseError("polynomial exponents must be nonnegative integers");
      }
      exps.push_back(e.get<std::int32_t>());
    }
    Rational c = term[1].is_string()
                     ? Rational::parse(term[1].get<std::string>())
                     : Rational(Integer(term[1].get<long>()));
    p.add_term(Monomial(std::move(exps)), c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Calculus and substitution
// ---------------------------------------------------------------------------

MultiPoly partial_derivative(const MultiPoly& p, int var) {
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const std::int32_t e = m[var];
    if (e == 0) continue;
    Monomial dm = m;
    dm[var] = e - 1;
    r.add_term(dm, c * Rational(e));
  }
  return r;
}

MultiPoly substitute(const MultiPoly& p,
                     const std::map<int, MultiPoly>& replacements) {
  for (const auto& [var, image] : replacements) {
    if (var < 0 || var >= p.nvars() || image.nvars() != p.nvars()) {
      throw PreconditionError("substitute: bad variable index or ring size");
    }
  }
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(p.nvars(), c);
    Monomial rest(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) continue;
      const auto it = replacements.find(i);
      if (it == replacements.end()) {
        rest[i] = m[i];
      } else {
        term *= it->second.pow(m[i]);
      }
    }
    r += term * MultiPoly::term(rest, Rational(1));
  }
  return r;
}

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (static_cast<int>(images.size()) != p.nvars()) {
    throw PreconditionError("compose: one image per variable required");
  }
  const int target_nvars = images.empty() ? 0 : images[0].nvars();
  MultiPoly r(target_nvars);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target_nvars, c);
    for (int i = 0; i < p.nvars(); ++i) {
      if (m[i] > 0) term *= images[static_cast<std::size_t>(i)].pow(m[i]);
    }
    r += term;
  }
  return r;
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw PreconditionError("evaluate: wrong point dimension");
  }
  Rational r(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < p.nvars(); ++i) {
      for (std::int32_t e = 0; e < m[i]; ++e) term *= point[static_cast<std::size_t>(i)];
    }
    r += term;
  }
  return r;
}

RationalInterval evaluate_interval(const MultiPoly& p,
                                   const std::vector<RationalInterval>& box) {
  if (static_cast<int>(box.size()) != p.nvars()) {
    throw PreconditionError("evaluate_interval: wrong box dimension");
  }
  RationalInterval r{Rational(0)};
  for (const auto& [m, c] : p.terms()) {
    RationalInterval term{c};
    for (int i = 0; i < p.nvars(); ++i) {
      for (std::int32_t e = 0; e < m[i]; ++e) term = term * box[static_cast<std::size_t>(i)];
    }
    r = r + term;
  }
  return r;
}

UniPoly to_unipoly(const MultiPoly& p, int var) {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i) {
      if (i != var && m[i] != 0) {
        throw PreconditionError("to_unipoly: polynomial is not univariate in requested variable");
      }
    }
    const std::size_t e = static_cast<std::size_t>(m[var]);
    if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
    coeffs[e] = c;
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly from_unipoly(const UniPoly& p, int nvars, int var) {
  MultiPoly r(nvars);
  for (int i = 0; i <= p.degree(); ++i) {
    Monomial m(nvars);
    m[var] = i;
    r.add_term(m, p.coeff(i));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Determinants and resultants
// ---------------------------------------------------------------------------

namespace detail {

MultiPoly poly_matrix_determinant(const std::vector<std::vector<MultiPoly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw PreconditionError("determinant of empty matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("determinant of non-square matrix");
  }
  const int nvars = a[0][0].nvars();
  if (n == 1) return a[0][0];

  // det over column subsets: minors[S] is the determinant of the submatrix
  // with rows 0..popcount(S)-1 and column set S.  Laplace expansion along the
  // last row of each submatrix; memoization turns m! work into 2^m.
  std::vector<MultiPoly> memo(std::size_t{1} << n);
  std::vector<bool> known(std::size_t{1} << n, false);
  memo[0] = MultiPoly::constant(nvars, Rational(1));
  known[0] = true;

  const auto rec = [&](auto&& self, std::uint32_t cols) -> const MultiPoly& {
    if (known[cols]) return memo[cols];
    const int row = __builtin_popcount(cols) - 1;
    MultiPoly det(nvars);
    int parity = row;  // cofactor sign (-1)^(row + column position)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      const MultiPoly& entry = a[static_cast<std::size_t>(row)][j];
      if (!entry.is_zero()) {
        MultiPoly sub = self(self, cols & ~(1u << j));
        sub *= entry;
        if (parity & 1) {
          det -= sub;
        } else {
          det += sub;
        }
      }
      ++parity;
    }
    memo[cols] = std::move(det);
    known[cols] = true;
    return memo[cols];
  };
  return rec(rec, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

}  // namespace detail

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  const auto df = f.degree_in(var);
  const auto dg = g.degree_in(var);
  if (df < 1 && dg < 1) {
    throw PreconditionError("resultant: both polynomials constant in the eliminated variable");
  }
  const int nvars = f.nvars();
  // Coefficient extraction: f = sum coeff_k(other vars) * var^k.
  const auto coeffs_in = [&](const MultiPoly& p, std::int64_t deg) {
    std::vector<MultiPoly> cs(static_cast<std::size_t>(deg + 1), MultiPoly(nvars));
    for (const auto& [m, c] : p.terms()) {
      Monomial rest = m;
      const std::int32_t e = rest[var];
      rest[var] = 0;
      cs[static_cast<std::size_t>(e)].add_term(rest, c);
    }
    return cs;
  };
  // Degenerate degrees: Res(f, g) with deg_var(g) = 0 is g^{deg f}.
  if (dg < 1) return g.pow(static_cast<int>(df));
  if (df < 1) return f.pow(static_cast<int>(dg));

  const auto fc = coeffs_in(f, df);
  const auto gc = coeffs_in(g, dg);
  const std::size_t size = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<MultiPoly>> syl(size,
                                          std::vector<MultiPoly>(size, MultiPoly(nvars)));
  // Sylvester matrix: dg rows of f-coefficients, df rows of g-coefficients,
  // highest coefficient first per the classical convention.
  for (std::int64_t i = 0; i < dg; ++i) {
    for (std::int64_t k = 0; k <= df; ++k) {
      syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
          fc[static_cast<std::size_t>(df - k)];
    }
  }
  for (std::int64_t i = 0; i < df; ++i) {
    for (std::int64_t k = 0; k <= dg; ++k) {
      syl[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + k)] =
          gc[static_cast<std::size_t>(dg - k)];
    }
  }
  return detail::poly_matrix_determinant(syl);
}

}  // namespace realdet
