#include "realdet/ratpar.hpp"

#include <map>
#include <utility>

#include "realdet/errors.hpp"

namespace realdet {

namespace {

// Quotient-ring scaffolding: the standard monomials index a vector-space
// basis, and every normal form is a coordinate vector over it.
struct Quotient {
  GroebnerBasis gb;
  std::vector<Monomial> basis;
  std::map<Monomial, int> index;
  int dim = 0;

  explicit Quotient(GroebnerBasis g) : gb(std::move(g)) {
    basis = standard_monomials(gb);
    dim = static_cast<int>(basis.size());
    for (int i = 0; i < dim; ++i) index.emplace(basis[static_cast<std::size_t>(i)], i);
  }

  std::vector<Rational> coords(const MultiPoly& nf) const {
    std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& [mono, c] : nf.terms()) {
      const auto it = index.find(mono);
      if (it == index.end()) {
        throw PreconditionError("rat_par: normal form left the standard basis");
      }
      v[static_cast<std::size_t>(it->second)] = c;
    }
    return v;
  }
};

// Minimal polynomial of the multiplication-by-l operator restricted to the
// Krylov space of the coset of 1; this is exactly the monic generator of the
// eliminant ideal I ∩ Q[l].  Optionally returns the Krylov coordinate
// columns 1, l, ..., l^(deg-1).
UniPoly krylov_minpoly(const Quotient& quo, const MultiPoly& ell,
                       std::vector<std::vector<Rational>>* columns) {
  struct Row {
    std::vector<Rational> vec;    // reduced Krylov vector
    std::vector<Rational> combo;  // its expression in the original columns
    int pivot;
  };
  std::vector<Row> rows;
  if (columns) columns->clear();

  MultiPoly power = MultiPoly::constant(quo.gb.nvars, Rational(1));
  for (int k = 0;; ++k) {
    std::vector<Rational> vec = quo.coords(power);
    std::vector<Rational> combo(static_cast<std::size_t>(k) + 1, Rational(0));
    combo.back() = Rational(1);

    // Eliminate against the accumulated echelon rows.
    for (const Row& r : rows) {
      const Rational& lead = vec[static_cast<std::size_t>(r.pivot)];
      if (lead.is_zero()) continue;
      const Rational factor = lead / r.vec[static_cast<std::size_t>(r.pivot)];
      for (int i = 0; i < quo.dim; ++i) {
        vec[static_cast<std::size_t>(i)] -= factor * r.vec[static_cast<std::size_t>(i)];
      }
      for (std::size_t i = 0; i < r.combo.size(); ++i) {
        combo[i] -= factor * r.combo[i];
      }
    }
    int pivot = -1;
    for (int i = 0; i < quo.dim; ++i) {
      if (!vec[static_cast<std::size_t>(i)].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Dependency: sum combo[j] * l^j = 0 in the quotient, combo[k] = 1.
      return UniPoly(std::move(combo));
    }
    if (columns) columns->push_back(quo.coords(power));
    rows.push_back(Row{std::move(vec), std::move(combo), pivot});
    power = normal_form(power * ell, quo.gb);
  }
}

// Solves K * b = w for the dense invertible Krylov matrix K given by columns,
// for several right-hand sides at once (plain Gauss-Jordan over Q).
std::vector<std::vector<Rational>> solve_in_krylov_basis(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<std::vector<Rational>>& rhs) {
  const int d = static_cast<int>(columns.size());
  const int nrhs = static_cast<int>(rhs.size());
  // Augmented matrix [K | rhs columns], K[i][j] = columns[j][i].
  std::vector<std::vector<Rational>> m(
      static_cast<std::size_t>(d),
      std::vector<Rational>(static_cast<std::size_t>(d + nrhs), Rational(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < nrhs; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)] =
          rhs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    while (pivot < d && m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)].is_zero()) {
      ++pivot;
    }
    if (pivot == d) {
      throw PreconditionError("rat_par: Krylov matrix unexpectedly singular");
    }
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
    const Rational inv = Rational(1) / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& entry : m[static_cast<std::size_t>(col)]) entry *= inv;
    for (int row = 0; row < d; ++row) {
      if (row == col) continue;
      const Rational factor = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (factor.is_zero()) continue;
      for (int j = col; j < d + nrhs; ++j) {
        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
            factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(nrhs));
  for (int j = 0; j < nrhs; ++j) {
    auto& b = out[static_cast<std::size_t>(j)];
    b.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      b[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)];
    }
  }
  return out;
}

// Candidate separating form: the single variables first, then random small
// integer combinations.
MultiPoly candidate_form(int attempt, int nvars, Rng& rng) {
  if (attempt < nvars) return MultiPoly::variable(nvars, attempt);
  MultiPoly ell(nvars);
  bool nonzero = false;
  while (!nonzero) {
    ell = MultiPoly(nvars);
    for (int v = 0; v < nvars; ++v) {
      const long c = static_cast<long>(rng.range(-20, 20));
      if (c == 0) continue;
      nonzero = true;
      Monomial mono(nvars);
      mono[v] = 1;
      ell.add_term(mono, Rational(Integer(c)));
    }
  }
  return ell;
}

// Adjoins the squarefree parts of the per-variable eliminants; by
// Seidenberg's criterion the enlarged ideal is radical and has the same
// variety.  Returns true when anything changed.
bool radicalize(Quotient& quo, std::vector<MultiPoly>& gens) {
  bool changed = false;
  std::vector<MultiPoly> extra;
  for (int v = 0; v < quo.gb.nvars; ++v) {
    const UniPoly eliminant =
        krylov_minpoly(quo, MultiPoly::variable(quo.gb.nvars, v), nullptr);
    const UniPoly sf = squarefree_part(eliminant);
    if (sf.degree() < eliminant.degree()) {
      extra.push_back(from_unipoly(sf, quo.gb.nvars, v));
      changed = true;
    }
  }
  if (!changed) return false;
  for (auto& p : extra) gens.push_back(std::move(p));
  quo = Quotient(groebner_basis(gens, quo.gb.order));
  return true;
}

RationalParametrization empty_parametrization(int nvars) {
  RationalParametrization rp;
  rp.ncoords = nvars;
  rp.q0 = UniPoly::constant(Rational(1));
  rp.q.assign(static_cast<std::size_t>(nvars), UniPoly());
  rp.qlast = UniPoly::constant(Rational(1));
  return rp;
}

}  // namespace

RationalParametrization rat_par(const GroebnerBasis& gb, Rng& rng,
                                int max_retries) {
  if (max_retries < 1) throw PreconditionError("rat_par: max_retries must be >= 1");
  if (gb.is_trivial()) return empty_parametrization(gb.nvars);
  if (!is_zero_dimensional(gb)) {
    throw PreconditionError("rat_par: ideal is not zero-dimensional");
  }

  std::vector<MultiPoly> gens = gb.polys;  // working generators (may grow)
  Quotient quo(gb);
  bool known_radical = false;

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const MultiPoly ell = candidate_form(attempt, quo.gb.nvars, rng);
    std::vector<std::vector<Rational>> columns;
    const UniPoly mu = krylov_minpoly(quo, ell, &columns);

    if (!is_squarefree(mu)) {
      // A radical ideal has squarefree eliminants for *every* form, so this
      // is a definitive non-radicality signal.
      if (!known_radical) {
        radicalize(quo, gens);
        known_radical = true;
      }
      continue;
    }
    if (mu.degree() < quo.dim) {
      // Either the form fails to separate the points or the ideal is not
      // radical; after half the budget, force the radicality question.
      if (!known_radical && attempt + 1 >= (max_retries + 1) / 2) {
        radicalize(quo, gens);
        known_radical = true;
      }
      continue;
    }

    // Shape position: deg mu = dim of the quotient and mu squarefree, so the
    // ideal is radical, ell separates, and the Krylov columns form a basis.
    std::vector<std::vector<Rational>> rhs;
    rhs.reserve(static_cast<std::size_t>(quo.gb.nvars));
    for (int v = 0; v < quo.gb.nvars; ++v) {
      rhs.push_back(quo.coords(normal_form(MultiPoly::variable(quo.gb.nvars, v), quo.gb)));
    }
    const auto solved = solve_in_krylov_basis(columns, rhs);

    RationalParametrization rp;
    rp.ncoords = quo.gb.nvars;
    rp.q0 = UniPoly::constant(Rational(1));
    for (const auto& b : solved) rp.q.push_back(UniPoly(b));
    rp.qlast = mu.primitive();
    rp.validate();

    // Roundtrip divisibility: every generator vanishes on the encoded set.
    for (const auto& g : gb.polys) {
      if (substitute_parametrization(rp, g).degree() >= 0) {
        throw PreconditionError(
            "rat_par: parametrization fails the divisibility verification");
      }
    }
    return rp;
  }
  throw RetryExhausted("rat_par: no separating linear form found within the retry cap");
}

RationalParametrization rat_par(const std::vector<MultiPoly>& gens, Rng& rng,
                                int max_retries) {
  if (gens.empty()) throw PreconditionError("rat_par: empty generator list");
  const GroebnerBasis gb =
      groebner_basis(gens, MonomialOrder::degrevlex(gens.front().nvars()));
  return rat_par(gb, rng, max_retries);
}

}  // namespace realdet
