#ifndef REALDET_SOLVER_HPP
#define REALDET_SOLVER_HPP

/// The recursive solver: at least one point per connected component of the
/// real determinantal variety { x : det(A0 + x1 A1 + ... + xn An) = 0 }.
///
/// Top level: a genericity gate certifies that the incidence variety
/// (A(x)y = 0, u'y = u_{m+1}) is empty or smooth of codimension m+1, by
/// checking that the ideal of the incidence system plus all maximal minors of
/// its Jacobian is trivial.  Then the recursion descends one variable at a
/// time: at each level it draws a random change of variables M, normalization
/// vectors u, v and a fiber value t0, computes the critical points of the
/// x1-projection on the transformed incidence variety (the Lagrange system),
/// parametrizes them, recurses on the pencil with x1 frozen at t0, lifts the
/// recursive result, and maps the union back through M.  Each level retries
/// its draw until the Lagrange system is zero-dimensional, up to a cap.

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <vector>

#include "realdet/linear_matrix.hpp"
#include "realdet/parametrization.hpp"
#include "realdet/rng.hpp"

namespace realdet {

struct SolveConfig {
  std::uint64_t seed = 0;
  long coeff_bound = 10;  ///< magnitude bound B for random draws
  int max_retries = 16;   ///< per-level redraw cap (>= 1)
  int digits = 10;        ///< certified decimal digits for point extraction
};

/// What happened at one recursion level.
struct LevelReport {
  int level = 0;  ///< number of variables at this level (n, n-1, ..., 1)
  std::optional<RandomDraw> draw;  ///< empty at the univariate base level
  long degree = 0;  ///< deg qlast contributed by this level's parametrization
  int retries = 0;  ///< redraws consumed before the level succeeded
};

struct SolveReport {
  int m = 0;
  int n = 0;
  SolveConfig config;
  SampleSet samples;
  long degree_sum = 0;  ///< sum of deg qlast over all items
  std::vector<LevelReport> per_level;
};

/// False iff the ideal of the incidence system together with all
/// (m+1) x (m+1) minors of its Jacobian is trivial, i.e. the incidence
/// variety is empty or smooth and equidimensional of codimension m+1.
/// Expects an incidence system (m+1 polynomials in n+m variables).
bool is_sing(const PolySystem& f);

/// Full solve: genericity gate, recursion, degree accounting.  Throws
/// GenericityError when the gate rejects the pencil (or a univariate base
/// case has identically vanishing determinant) and RetryExhausted when some
/// level cannot reach a zero-dimensional Lagrange system within the retry
/// cap.  The environment variable REALDET_MAX_RETRIES, when set to a positive
/// integer, overrides cfg.max_retries.
SolveReport realdet(const LinearMatrix& a, const SolveConfig& cfg);

/// The recursion itself (no genericity gate).  Level reports are appended to
/// `levels` in the order the levels complete (deepest first).
SampleSet realdet_rec(const LinearMatrix& a, const SolveConfig& cfg, Rng& rng,
                      std::vector<LevelReport>& levels);

/// Degree (deg qlast) of the parametrization of one Lagrange system for the
/// given draw.  Throws PreconditionError when the system is not
/// zero-dimensional.
long lagrange_degree(const LinearMatrix& a, const RandomDraw& draw, Rng& rng,
                     int max_retries = 16);

/// JSON report of a solve: pencil shape, configuration, parametrizations,
/// certified real-point boxes with decimal approximations to the configured
/// digits, per-point verification flags, and per-level statistics.  The
/// output is deterministic: identical seed and input produce byte-identical
/// text.
nlohmann::ordered_json solve_report_json(const SolveReport& report,
                                         const LinearMatrix& a);

/// Human-readable rendering of the same information.
std::string solve_report_text(const SolveReport& report, const LinearMatrix& a);

}  // namespace realdet

#endif  // REALDET_SOLVER_HPP
