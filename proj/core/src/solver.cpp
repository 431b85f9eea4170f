#include "realdet/solver.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "realdet/errors.hpp"
#include "realdet/groebner.hpp"
#include "realdet/ratpar.hpp"

namespace realdet {

namespace {

std::vector<int> first_indices(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Advances a k-subset of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

int effective_retries(const SolveConfig& cfg) {
  if (const char* env = std::getenv("REALDET_MAX_RETRIES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return cfg.max_retries;
}

SampleSet base_case(const LinearMatrix& a, std::vector<LevelReport>& levels) {
  const UniPoly d = to_unipoly(determinant(a), 0);
  if (d.is_zero()) {
    throw GenericityError("univariate base determinant vanishes identically");
  }
  SampleSet out;
  LevelReport rep;
  rep.level = 1;
  if (d.degree() == 0) {
    levels.push_back(rep);  // nonsingular pencil on the whole line: no points
    return out;
  }
  RationalParametrization rp;
  rp.ncoords = 1;
  rp.q0 = UniPoly::constant(Rational(1));
  rp.q.push_back(UniPoly::t());
  rp.qlast = squarefree_part(d).primitive();
  rp.validate();
  rep.degree = rp.degree();
  levels.push_back(rep);
  out.items.push_back(std::move(rp));
  return out;
}

}  // namespace

bool is_sing(const PolySystem& f) {
  const int k = static_cast<int>(f.polys.size());
  if (k == 0 || f.nvars < k) {
    throw PreconditionError("is_sing: expected at least as many variables as equations");
  }
  std::vector<MultiPoly> gens = f.polys;
  const auto jac = jacobian_matrix(f.polys, first_indices(f.nvars));
  std::vector<int> cols = first_indices(k);
  do {
    std::vector<std::vector<MultiPoly>> minor(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      for (int j : cols) {
        minor[static_cast<std::size_t>(i)].push_back(
            jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
    gens.push_back(detail::poly_matrix_determinant(minor));
  } while (next_combination(cols, f.nvars));
  return !ideal_is_trivial(gens, MonomialOrder::degrevlex(f.nvars));
}

SampleSet realdet_rec(const LinearMatrix& a, const SolveConfig& cfg, Rng& rng,
                      std::vector<LevelReport>& levels) {
  if (a.n == 1) return base_case(a, levels);

  const MonomialOrder order = MonomialOrder::degrevlex(a.n + 2 * a.m + 1);
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const std::size_t mark = levels.size();
    const RandomDraw dw = RandomDraw::draw(a.m, a.n, cfg.coeff_bound, rng);

    // Critical points of the x1-projection on the transformed incidence
    // variety; a positive-dimensional Lagrange system means the draw missed
    // the generic locus, so redraw.
    const PolySystem lag = lagrange_system(a, dw.M, dw.u, dw.v);
    const GroebnerBasis gb = groebner_basis(lag.polys, order);
    if (!is_zero_dimensional(gb)) continue;
    const RationalParametrization crit = rat_par(gb, rng, cfg.max_retries);
    std::vector<int> xblock(static_cast<std::size_t>(a.n));
    std::iota(xblock.begin(), xblock.end(), 0);
    const RationalParametrization critx = project(crit, xblock);

    // Recurse on the fiber x1 = t0 of the transformed pencil.  A degenerate
    // fiber (identically singular base determinant) is a measure-zero t0:
    // roll back its partial level reports and redraw.
    const LinearMatrix fiber = substitute_x1(change_of_variables(a, dw.M), dw.t0);
    SampleSet rec;
    try {
      rec = realdet_rec(fiber, cfg, rng, levels);
    } catch (const GenericityError&) {
      levels.resize(mark);
      continue;
    }

    SampleSet mine;
    if (!critx.empty()) mine.items.push_back(critx);
    SampleSet lifted;
    for (const auto& item : rec.items) {
      lifted.items.push_back(lift(item, dw.t0, 0));
    }
    SampleSet merged = sample_union(std::move(mine), std::move(lifted));
    SampleSet mapped;
    for (const auto& item : merged.items) {
      mapped.items.push_back(image(item, dw.M));
    }

    LevelReport rep;
    rep.level = a.n;
    rep.draw = dw;
    rep.degree = critx.degree();
    rep.retries = attempt;
    levels.push_back(std::move(rep));
    return mapped;
  }
  throw RetryExhausted("no zero-dimensional critical-point system within the retry cap");
}

SolveReport realdet(const LinearMatrix& a, const SolveConfig& cfg_in) {
  a.validate();
  SolveConfig cfg = cfg_in;
  cfg.max_retries = effective_retries(cfg_in);
  if (cfg.max_retries < 1 || cfg.digits < 1 || cfg.coeff_bound < 1) {
    throw PreconditionError("realdet: config requires max_retries, digits, coeff_bound >= 1");
  }

  Rng rng(cfg.seed);
  const RandomDraw gate = RandomDraw::draw(a.m, a.n, cfg.coeff_bound, rng);
  if (is_sing(incidence_system(a, gate.u))) {
    throw GenericityError("incidence variety fails the smoothness certificate");
  }

  SolveReport report;
  report.m = a.m;
  report.n = a.n;
  report.config = cfg;
  report.samples = realdet_rec(a, cfg, rng, report.per_level);
  report.degree_sum = report.samples.degree_sum();
  return report;
}

long lagrange_degree(const LinearMatrix& a, const RandomDraw& draw, Rng& rng,
                     int max_retries) {
  const PolySystem lag = lagrange_system(a, draw.M, draw.u, draw.v);
  const GroebnerBasis gb =
      groebner_basis(lag.polys, MonomialOrder::degrevlex(lag.nvars));
  return rat_par(gb, rng, max_retries).degree();
}

}  // namespace realdet
