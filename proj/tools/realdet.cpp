// Command line driver for the realdet library.
//
// Subcommands:
//   solve   -- run the full sampling algorithm on a pencil and print the
//              report (JSON or text): parametrizations, degree sum, certified
//              real-point boxes with decimal approximations, per-level stats.
//   bounds  -- print the degree bound table delta(m, n; t), the aggregate
//              bound b(m, n), and the operation-count estimate C(m, n).
//   random  -- generate a random dense pencil with integer entries in [-B, B]
//              and print it as JSON (reproducible from the seed).
//   verify  -- check every parametrization in a samples file against the
//              determinant of a pencil (exact divisibility test).
//   bench   -- run the solver on fresh random pencils over a rectangle of
//              (m, n) shapes and tabulate degree sums against b(m, n).
//
// Exit codes (stable, also listed in --help):
//   0  success
//   2  parse error (malformed JSON, bad rational literal, shape mismatch,
//      invalid command line)
//   3  genericity failure (identically zero determinant, singular incidence
//      system)
//   4  retry budget exhausted before reaching a generic configuration
//   5  interval refinement budget exhausted
//   1  any other error
//
// The environment variable REALDET_MAX_RETRIES, when set to a positive
// integer, overrides the per-level retry cap for `solve` and `bench`.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "realdet/bounds.hpp"
#include "realdet/errors.hpp"
#include "realdet/linear_matrix.hpp"
#include "realdet/parametrization.hpp"
#include "realdet/rng.hpp"
#include "realdet/solver.hpp"

namespace {

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitRetryExhausted = 4;
constexpr int kExitRefinement = 5;

// Reads a whole file, with "-" meaning standard input.
std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw realdet::ParseError("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw realdet::ParseError(origin + ": " + e.what());
  }
}

realdet::LinearMatrix load_pencil(const std::string& path) {
  return realdet::LinearMatrix::from_json(parse_json(read_input(path), path));
}

struct SolveOptions {
  std::string input;
  std::string format = "json";
  realdet::SolveConfig cfg;
};

int cmd_solve(const SolveOptions& opt) {
  const realdet::LinearMatrix a = load_pencil(opt.input);
  const realdet::SolveReport report = realdet::realdet(a, opt.cfg);
  if (opt.format == "text") {
    std::cout << realdet::solve_report_text(report, a);
  } else {
    std::cout << realdet::solve_report_json(report, a).dump(2) << '\n';
  }
  return 0;
}

int cmd_bounds(int m, int n) {
  const realdet::DegreeBounds bounds = realdet::DegreeBounds::compute(m, n);
  std::cout << "degree bounds for an " << m << " x " << m << " pencil in " << n
            << " variables\n";
  for (std::size_t i = 0; i < bounds.table.size(); ++i) {
    std::cout << "  delta(" << m << ", " << n << "; " << (i + 1)
              << ") = " << bounds.table[i] << '\n';
  }
  std::cout << "  b(" << m << ", " << n << ") = " << bounds.b << '\n';
  std::cout << "  C(" << m << ", " << n
            << ") = " << realdet::complexity_estimate(m, n) << '\n';
  return 0;
}

int cmd_random(int m, int n, long coeff_bound, std::uint64_t seed) {
  realdet::Rng rng(seed);
  const realdet::LinearMatrix a = realdet::random_pencil(m, n, coeff_bound, rng);
  std::cout << a.to_json().dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& input, const std::string& samples_path) {
  const realdet::LinearMatrix a = load_pencil(input);
  const nlohmann::json sj = parse_json(read_input(samples_path), samples_path);
  realdet::SampleSet samples;
  if (sj.is_object() && sj.contains("samples")) {
    // A full solve report: pull out its samples block.
    samples = realdet::SampleSet::from_json(sj.at("samples"));
  } else {
    samples = realdet::SampleSet::from_json(sj);
  }
  if (samples.items.empty()) {
    std::cout << "no parametrizations to check: vacuous pass\n";
    return 0;
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < samples.items.size(); ++i) {
    const bool ok = realdet::verify_on_determinant(samples.items[i], a);
    all_pass = all_pass && ok;
    std::cout << "item " << i << " (degree " << samples.items[i].degree()
              << "): " << (ok ? "pass" : "FAIL") << '\n';
  }
  std::cout << (all_pass ? "all items pass" : "verification FAILED") << '\n';
  return all_pass ? 0 : kExitOther;
}

struct BenchOptions {
  int m_min = 2;
  int m_max = 3;
  int n_min = 2;
  int n_max = 4;
  std::uint64_t seed = 1;
  long coeff_bound = 10;
};

int cmd_bench(const BenchOptions& opt) {
  std::cout << "  m   n   degree_sum   b(m,n)   seconds   status\n";
  bool any_violation = false;
  for (int m = opt.m_min; m <= opt.m_max; ++m) {
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
      realdet::SolveConfig cfg;
      // Independent per-row seed so rows are reproducible in isolation.
      cfg.seed = opt.seed + 1000003ULL * static_cast<std::uint64_t>(m) +
                 static_cast<std::uint64_t>(n);
      cfg.coeff_bound = opt.coeff_bound;
      realdet::Rng rng(cfg.seed);
      const realdet::LinearMatrix a =
          realdet::random_pencil(m, n, opt.coeff_bound, rng);
      const realdet::Integer bound = realdet::b_bound(m, n);
      std::cout << std::setw(3) << m << std::setw(4) << n << std::flush;
      const auto start = std::chrono::steady_clock::now();
      try {
        const realdet::SolveReport report = realdet::realdet(a, cfg);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        const bool within = realdet::Integer(report.degree_sum) <= bound;
        any_violation = any_violation || !within;
        std::cout << std::setw(13) << report.degree_sum << std::setw(9) << bound
                  << std::setw(10) << std::fixed << std::setprecision(2)
                  << elapsed.count()
                  << "   " << (within ? "ok" : "EXCEEDS BOUND") << '\n';
      } catch (const realdet::Error& e) {
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        std::cout << std::setw(13) << '-' << std::setw(9) << bound
                  << std::setw(10) << std::fixed << std::setprecision(2)
                  << elapsed.count() << "   error: " << e.what() << '\n';
      }
    }
  }
  return any_violation ? kExitOther : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "realdet: sample points on every connected component of the real "
      "hypersurface det(A0 + x1*A1 + ... + xn*An) = 0"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 2 parse error, 3 genericity failure, 4 retry "
      "budget exhausted,\n5 refinement budget exhausted, 1 other error.\n"
      "REALDET_MAX_RETRIES overrides the per-level retry cap when set to a "
      "positive integer.");

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "Run the solver on a pencil read from a JSON file");
  solve->add_option("--input", solve_opt.input,
                    "Pencil JSON file (\"-\" for standard input)")
      ->required();
  solve->add_option("--seed", solve_opt.cfg.seed, "Random seed")
      ->capture_default_str();
  solve->add_option("--retries", solve_opt.cfg.max_retries,
                    "Per-level redraw cap")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  solve->add_option("--digits", solve_opt.cfg.digits,
                    "Certified decimal digits for real points")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  solve->add_option("--coeff-bound", solve_opt.cfg.coeff_bound,
                    "Magnitude bound for random draws")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  solve->add_option("--format", solve_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int bounds_m = 0;
  int bounds_n = 0;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "Print the degree bound table for a pencil shape");
  bounds->add_option("--m", bounds_m, "Matrix size")
      ->required()
      ->check(CLI::Range(1, 1000000));
  bounds->add_option("--n", bounds_n, "Number of variables")
      ->required()
      ->check(CLI::Range(1, 1000000));

  int random_m = 0;
  int random_n = 0;
  long random_bound = 10;
  std::uint64_t random_seed = 0;
  CLI::App* random = app.add_subcommand(
      "random", "Generate a random dense pencil and print it as JSON");
  random->add_option("--m", random_m, "Matrix size")
      ->required()
      ->check(CLI::Range(1, 1000000));
  random->add_option("--n", random_n, "Number of variables")
      ->required()
      ->check(CLI::Range(1, 1000000));
  random->add_option("--coeff-bound", random_bound,
                     "Entries are uniform integers in [-B, B]")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  random->add_option("--seed", random_seed, "Random seed")
      ->capture_default_str();

  std::string verify_input;
  std::string verify_samples;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Check parametrizations against the determinant of a pencil");
  verify->add_option("--input", verify_input,
                     "Pencil JSON file (\"-\" for standard input)")
      ->required();
  verify->add_option("--samples", verify_samples,
                     "Samples file: a solve report or a bare parametrization "
                     "array")
      ->required();

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Tabulate solver degree sums over a rectangle of shapes");
  bench->add_option("--m-min", bench_opt.m_min, "Smallest matrix size")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  bench->add_option("--m-max", bench_opt.m_max, "Largest matrix size")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  bench->add_option("--n-min", bench_opt.n_min, "Smallest variable count")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  bench->add_option("--n-max", bench_opt.n_max, "Largest variable count")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "Master seed for per-row draws")
      ->capture_default_str();
  bench->add_option("--coeff-bound", bench_opt.coeff_bound,
                    "Magnitude bound for random pencil entries")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve) return cmd_solve(solve_opt);
    if (*bounds) return cmd_bounds(bounds_m, bounds_n);
    if (*random) return cmd_random(random_m, random_n, random_bound, random_seed);
    if (*verify) return cmd_verify(verify_input, verify_samples);
    if (*bench) {
      if (bench_opt.m_min > bench_opt.m_max || bench_opt.n_min > bench_opt.n_max) {
        std::cerr << "error: empty shape range\n";
        return kExitParse;
      }
      return cmd_bench(bench_opt);
    }
  } catch (const realdet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const realdet::GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << '\n';
    return kExitGenericity;
  } catch (const realdet::RetryExhausted& e) {
    std::cerr << "retry budget exhausted: " << e.what() << '\n';
    return kExitRetryExhausted;
  } catch (const realdet::RefinementError& e) {
    std::cerr << "refinement budget exhausted: " << e.what() << '\n';
    return kExitRefinement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}
