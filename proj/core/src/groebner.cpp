#include "realdet/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

#include "realdet/errors.hpp"

namespace realdet {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomial layer
//
// The engine works on primitive integer polynomials: term lists sorted in
// strictly decreasing monomial order, with coefficient content 1.  All
// reductions are fraction-free; the rational bookkeeping needed to keep the
// already-emitted part of a normal form consistent with later rescalings of
// the working remainder is tracked through a single running scalar.
// ---------------------------------------------------------------------------

struct ITerm {
  Monomial mono;
  Integer coeff;
};

using IPoly = std::vector<ITerm>;  // sorted descending, no zero coefficients

Integer int_content(const IPoly& p) {
  Integer g(0);
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(IPoly& p, const Integer& g) {
  if (g == 1) return;
  for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

// Converts a rational polynomial to a primitive integer polynomial (an
// overall positive rational factor is dropped, which never changes the ideal).
IPoly to_ipoly(const MultiPoly& p, const MonomialOrder& order) {
  IPoly out;
  Integer den_lcm(1);
  for (const auto& [mono, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  out.reserve(p.terms().size());
  for (const auto& [mono, c] : p.terms()) {
    Integer scaled = c.num() * (den_lcm / c.den());
    out.push_back(ITerm{mono, std::move(scaled)});
  }
  std::sort(out.begin(), out.end(), [&](const ITerm& a, const ITerm& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  divide_content(out, int_content(out));
  return out;
}

MultiPoly to_multipoly_monic(const IPoly& p, int nvars) {
  MultiPoly out(nvars);
  if (p.empty()) return out;
  const Rational lc(p.front().coeff);
  for (const auto& t : p) out.add_term(t.mono, Rational(t.coeff) / lc);
  return out;
}

// a * (qp . p) - b * (qg . g), merging the two sorted term lists.
IPoly ipoly_combine(const IPoly& p, std::size_t p_from, const Integer& a,
                    const Monomial& qp, const IPoly& g, const Integer& b,
                    const Monomial& qg, const MonomialOrder& order) {
  IPoly out;
  out.reserve(p.size() - p_from + g.size());
  std::size_t i = p_from, j = 0;
  while (i < p.size() && j < g.size()) {
    Monomial mp = p[i].mono * qp;
    Monomial mg = g[j].mono * qg;
    const int cmp = order.compare(mp, mg);
    if (cmp > 0) {
      out.push_back(ITerm{std::move(mp), a * p[i].coeff});
      ++i;
    } else if (cmp < 0) {
      out.push_back(ITerm{std::move(mg), -b * g[j].coeff});
      ++j;
    } else {
      Integer c = a * p[i].coeff - b * g[j].coeff;
      if (c != 0) out.push_back(ITerm{std::move(mp), std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(ITerm{p[i].mono * qp, a * p[i].coeff});
  for (; j < g.size(); ++j) out.push_back(ITerm{g[j].mono * qg, -b * g[j].coeff});
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger engine with Gebauer-Moeller pair updates and sugar selection
// ---------------------------------------------------------------------------

struct Engine {
  MonomialOrder order;
  int nvars;

  std::vector<IPoly> basis;
  std::vector<Monomial> leads;
  std::vector<Integer> leadcs;
  std::vector<std::int64_t> sugars;

  struct Pair {
    int i, j;  // i < j
    Monomial lcm;
    std::int64_t sugar;
  };

  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      const int c = ord->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  std::set<Pair, PairLess> pairs;
  bool unit_found = false;

  explicit Engine(const MonomialOrder& ord, int nv)
      : order(ord), nvars(nv), pairs(PairLess{&order}) {}

  Monomial one() const { return Monomial(nvars); }

  // Full normal form of p against the current basis.  Fraction-free: the
  // remainder is rescaled by integer factors as reductions demand; `scale`
  // tracks the cumulative factor so already-emitted terms can be finalized
  // consistently.  The result is primitive.
  IPoly reduce_full(IPoly p, std::int64_t& sugar) const {
    std::vector<std::pair<Monomial, Rational>> emitted;
    Rational scale(1);
    int steps = 0;
    std::size_t head = 0;
    while (head < p.size()) {
      const ITerm& lt = p[head];
      int g = -1;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (leads[k].divides(lt.mono)) {
          g = static_cast<int>(k);
          break;
        }
      }
      if (g < 0) {
        emitted.emplace_back(lt.mono, Rational(lt.coeff) / scale);
        ++head;
        continue;
      }
      const Monomial q = leads[static_cast<std::size_t>(g)].quotient_of(lt.mono);
      Integer d;
      mpz_gcd(d.get_mpz_t(), lt.coeff.get_mpz_t(),
              leadcs[static_cast<std::size_t>(g)].get_mpz_t());
      const Integer a = leadcs[static_cast<std::size_t>(g)] / d;
      const Integer b = lt.coeff / d;
      sugar = std::max(sugar, sugars[static_cast<std::size_t>(g)] + q.degree());
      p = ipoly_combine(p, head, a, one(), basis[static_cast<std::size_t>(g)], b, q, order);
      head = 0;
      scale *= Rational(a);
      if (++steps % 16 == 0 && !p.empty()) {
        const Integer c = int_content(p);
        if (c > 1) {
          divide_content(p, c);
          scale /= Rational(c);
        }
      }
    }
    // Clear denominators across the emitted terms and strip the content.
    IPoly out;
    out.reserve(emitted.size());
    Integer den_lcm(1);
    for (const auto& [mono, c] : emitted) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    for (auto& [mono, c] : emitted) {
      out.push_back(ITerm{std::move(mono), c.num() * (den_lcm / c.den())});
    }
    divide_content(out, int_content(out));
    return out;
  }

  // Gebauer-Moeller update: adds element t to the basis, prunes the pending
  // pair set with the chain criterion and drops coprime-lead pairs (product
  // criterion).
  void add_basis_element(IPoly p, std::int64_t sugar) {
    const int t = static_cast<int>(basis.size());
    const Monomial& lt = p.front().mono;

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(basis.size());
    for (int i = 0; i < t; ++i) {
      cands.push_back(Cand{i, leads[static_cast<std::size_t>(i)].lcm(lt),
                           leads[static_cast<std::size_t>(i)].coprime_with(lt)});
    }

    // Phase 1: keep a candidate when its leads are coprime or when no other
    // surviving/pending candidate has an lcm dividing its lcm.
    std::vector<Cand> kept;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      const Cand& c = cands[idx];
      bool dominated = false;
      if (!c.coprime) {
        for (std::size_t j = idx + 1; j < cands.size() && !dominated; ++j) {
          dominated = cands[j].lcm.divides(c.lcm);
        }
        for (const auto& k : kept) {
          if (dominated) break;
          dominated = k.lcm.divides(c.lcm);
        }
      }
      if (c.coprime || !dominated) kept.push_back(c);
    }

    // Phase 2: the product criterion discards coprime-lead pairs outright.
    std::vector<Pair> fresh;
    for (const auto& c : kept) {
      if (c.coprime) continue;
      const std::int64_t s =
          std::max(sugars[static_cast<std::size_t>(c.i)] +
                       (c.lcm.degree() - leads[static_cast<std::size_t>(c.i)].degree()),
                   sugar + (c.lcm.degree() - lt.degree()));
      fresh.push_back(Pair{c.i, t, c.lcm, s});
    }

    // Phase 3: prune old pairs whose lcm is a proper multiple of the new lead.
    std::set<Pair, PairLess> remaining(PairLess{&order});
    for (const auto& pr : pairs) {
      const bool covered =
          lt.divides(pr.lcm) &&
          leads[static_cast<std::size_t>(pr.i)].lcm(lt) != pr.lcm &&
          leads[static_cast<std::size_t>(pr.j)].lcm(lt) != pr.lcm;
      if (!covered) remaining.insert(pr);
    }
    pairs.swap(remaining);
    for (auto& pr : fresh) pairs.insert(std::move(pr));

    leads.push_back(lt);
    leadcs.push_back(p.front().coeff);
    sugars.push_back(sugar);
    basis.push_back(std::move(p));
  }

  // Inserts one polynomial: reduce, detect units, extend the basis.
  void insert(IPoly p, std::int64_t sugar) {
    if (unit_found) return;
    p = reduce_full(std::move(p), sugar);
    if (p.empty()) return;
    if (p.front().mono.is_one()) {
      unit_found = true;
      return;
    }
    add_basis_element(std::move(p), sugar);
  }

  void run() {
    while (!pairs.empty() && !unit_found) {
      const Pair pr = *pairs.begin();
      pairs.erase(pairs.begin());
      const IPoly& f = basis[static_cast<std::size_t>(pr.i)];
      const IPoly& g = basis[static_cast<std::size_t>(pr.j)];
      const Monomial qi = leads[static_cast<std::size_t>(pr.i)].quotient_of(pr.lcm);
      const Monomial qj = leads[static_cast<std::size_t>(pr.j)].quotient_of(pr.lcm);
      Integer d;
      mpz_gcd(d.get_mpz_t(), leadcs[static_cast<std::size_t>(pr.i)].get_mpz_t(),
              leadcs[static_cast<std::size_t>(pr.j)].get_mpz_t());
      const Integer a = leadcs[static_cast<std::size_t>(pr.j)] / d;
      const Integer b = leadcs[static_cast<std::size_t>(pr.i)] / d;
      IPoly s = ipoly_combine(f, 0, a, qi, g, b, qj, order);
      insert(std::move(s), pr.sugar);
    }
  }

  // Minimal + reduced basis extraction, converted to monic rational form.
  std::vector<MultiPoly> finalize() {
    std::vector<MultiPoly> out;
    if (unit_found) {
      out.push_back(MultiPoly::constant(nvars, Rational(1)));
      return out;
    }
    // Keep only elements whose lead is not divisible by another kept lead;
    // among equal leads keep the first.
    std::vector<int> idx(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const int c = order.compare(leads[static_cast<std::size_t>(a)],
                                  leads[static_cast<std::size_t>(b)]);
      if (c != 0) return c < 0;
      return a < b;
    });
    std::vector<int> minimal;
    for (int i : idx) {
      bool divisible = false;
      for (int k : minimal) {
        if (leads[static_cast<std::size_t>(k)].divides(leads[static_cast<std::size_t>(i)])) {
          divisible = true;
          break;
        }
      }
      if (!divisible) minimal.push_back(i);
    }
    // Tail-reduce every survivor against the other survivors.  Minimal leads
    // are pairwise non-divisible, so reducing a full element against the
    // *other* elements never touches its lead.
    std::vector<IPoly> reduced(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Engine others(order, nvars);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == k) continue;
        const auto src = static_cast<std::size_t>(minimal[j]);
        others.basis.push_back(basis[src]);
        others.leads.push_back(leads[src]);
        others.leadcs.push_back(leadcs[src]);
        others.sugars.push_back(sugars[src]);
      }
      std::int64_t sugar = sugars[static_cast<std::size_t>(minimal[k])];
      reduced[k] = others.reduce_full(basis[static_cast<std::size_t>(minimal[k])], sugar);
    }
    out.reserve(reduced.size());
    for (const auto& p : reduced) out.push_back(to_multipoly_monic(p, nvars));
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return order.compare(leading_monomial(a), leading_monomial(b)) < 0;
    });
    return out;
  }

  Monomial leading_monomial(const MultiPoly& p) const {
    const Monomial* best = nullptr;
    for (const auto& [mono, c] : p.terms()) {
      if (!best || order.compare(mono, *best) > 0) best = &mono;
    }
    return *best;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

bool GroebnerBasis::is_trivial() const {
  return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    const Monomial* best = nullptr;
    for (const auto& [mono, c] : p.terms()) {
      if (!best || order.compare(mono, *best) > 0) best = &mono;
    }
    out.push_back(*best);
  }
  return out;
}

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& gens,
                             const MonomialOrder& order) {
  int nvars = -1;
  for (const auto& g : gens) {
    if (nvars < 0) {
      nvars = g.nvars();
    } else if (g.nvars() != nvars) {
      throw PreconditionError("groebner_basis: generators live in different rings");
    }
  }
  if (nvars < 0) throw PreconditionError("groebner_basis: empty generator list");

  Engine eng(order, nvars);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    eng.insert(to_ipoly(g, order), g.total_degree());
    if (eng.unit_found) break;
  }
  eng.run();

  return GroebnerBasis{order, nvars, eng.finalize()};
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars) {
    throw PreconditionError("normal_form: polynomial lives in a different ring");
  }
  const auto leads = gb.leading_monomials();
  MultiPoly rem = p;
  MultiPoly out(gb.nvars);
  while (!rem.is_zero()) {
    // Largest remaining monomial in the basis order.
    const Monomial* best = nullptr;
    for (const auto& [mono, c] : rem.terms()) {
      if (!best || gb.order.compare(mono, *best) > 0) best = &mono;
    }
    const Monomial mono = *best;
    const Rational coeff = rem.coeff(mono);
    int g = -1;
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (leads[k].divides(mono)) {
        g = static_cast<int>(k);
        break;
      }
    }
    if (g < 0) {
      out.add_term(mono, coeff);
      rem.set_coeff(mono, Rational(0));
      continue;
    }
    const Monomial q = leads[static_cast<std::size_t>(g)].quotient_of(mono);
    MultiPoly sub = gb.polys[static_cast<std::size_t>(g)];
    sub *= coeff;
    MultiPoly shift(gb.nvars);
    shift.add_term(q, Rational(1));
    rem -= shift * sub;
  }
  return out;
}

bool ideal_is_trivial(const std::vector<MultiPoly>& gens,
                      const MonomialOrder& order) {
  return groebner_basis(gens, order).is_trivial();
}

int staircase_dimension(const GroebnerBasis& gb) {
  if (gb.is_trivial()) return -1;
  if (gb.polys.empty()) return gb.nvars;
  if (gb.nvars > 63) throw PreconditionError("staircase_dimension: too many variables");

  // Collect the supports of the leading monomials as bit masks and drop
  // supersets (hitting a subset hits the superset for free).
  std::vector<std::uint64_t> supports;
  for (const auto& lm : gb.leading_monomials()) {
    std::uint64_t mask = 0;
    const auto& e = lm.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) mask |= (std::uint64_t{1} << i);
    }
    supports.push_back(mask);
  }
  std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  std::vector<std::uint64_t> reduced;
  for (std::uint64_t s : supports) {
    bool redundant = false;
    for (std::uint64_t r : reduced) {
      if ((r & s) == r) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(s);
  }

  // The complement of a maximal staircase-independent variable set is a
  // minimum hitting set of the supports; branch and bound on the smallest
  // un-hit support.
  int best = gb.nvars;
  auto dfs = [&](auto&& self, std::uint64_t chosen, int count) -> void {
    if (count >= best) return;
    std::uint64_t pending = 0;
    for (std::uint64_t s : reduced) {
      if ((s & chosen) == 0) {
        pending = s;
        break;
      }
    }
    if (pending == 0) {
      best = count;
      return;
    }
    while (pending != 0) {
      const int v = __builtin_ctzll(pending);
      pending &= pending - 1;
      self(self, chosen | (std::uint64_t{1} << v), count + 1);
    }
  };
  dfs(dfs, 0, 0);
  return gb.nvars - best;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_trivial()) return true;
  if (gb.polys.empty()) return gb.nvars == 0;
  std::vector<bool> pure(static_cast<std::size_t>(gb.nvars), false);
  for (const auto& lm : gb.leading_monomials()) {
    const auto& e = lm.exponents();
    int var = -1;
    bool single = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        if (var >= 0) {
          single = false;
          break;
        }
        var = static_cast<int>(i);
      }
    }
    if (single && var >= 0) pure[static_cast<std::size_t>(var)] = true;
  }
  for (bool b : pure) {
    if (!b) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (gb.is_trivial()) return {};
  if (!is_zero_dimensional(gb)) {
    throw PreconditionError("standard_monomials: ideal is not zero-dimensional");
  }
  const auto leads = gb.leading_monomials();
  std::set<Monomial> seen;
  std::queue<Monomial> work;
  work.push(Monomial(gb.nvars));
  while (!work.empty()) {
    Monomial m = std::move(work.front());
    work.pop();
    if (seen.count(m) != 0) continue;
    bool reducible = false;
    for (const auto& lm : leads) {
      if (lm.divides(m)) {
        reducible = true;
        break;
      }
    }
    if (reducible) continue;
    seen.insert(m);
    for (int v = 0; v < gb.nvars; ++v) {
      Monomial up = m;
      Monomial step(gb.nvars);
      step[v] = 1;
      work.push(up * step);
    }
  }
  return std::vector<Monomial>(seen.begin(), seen.end());
}

long zero_dim_degree(const GroebnerBasis& gb) {
  return static_cast<long>(standard_monomials(gb).size());
}

DimensionDegree dim_degree_via_slicing(const std::vector<MultiPoly>& gens,
                                     Rng& rng, int retries) {
  const GroebnerBasis gb = groebner_basis(gens, MonomialOrder::degrevlex(
                                                    gens.empty() ? 0 : gens[0].nvars()));
  if (gb.is_trivial()) return DimensionDegree{-1, 0};
  const int dim = staircase_dimension(gb);
  if (dim == 0) return DimensionDegree{0, zero_dim_degree(gb)};

  const int nvars = gb.nvars;
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<MultiPoly> sliced = gens;
    for (int h = 0; h < dim; ++h) {
      MultiPoly form(nvars);
      bool nonconstant = false;
      do {
        form = MultiPoly::constant(nvars, Rational(Integer(static_cast<long>(rng.range(-99, 99)))));
        nonconstant = false;
        for (int v = 0; v < nvars; ++v) {
          const long c = static_cast<long>(rng.range(-99, 99));
          if (c != 0) {
            nonconstant = true;
            Monomial mono(nvars);
            mono[v] = 1;
            form.add_term(mono, Rational(Integer(c)));
          }
        }
      } while (!nonconstant);
      sliced.push_back(std::move(form));
    }
    const GroebnerBasis cut = groebner_basis(sliced, gb.order);
    if (cut.is_trivial()) continue;
    if (staircase_dimension(cut) != 0) continue;
    return DimensionDegree{dim, zero_dim_degree(cut)};
  }
  throw RetryExhausted("dim_degree_via_slicing: random hyperplane sections stayed degenerate");
}

}  // namespace realdet
