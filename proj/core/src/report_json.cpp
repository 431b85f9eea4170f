#include <nlohmann/json.hpp>
#include <sstream>

#include "realdet/solver.hpp"

namespace realdet {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_vector_json(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

ordered_json rational_matrix_json(const RationalMatrix& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : m) arr.push_back(rational_vector_json(row));
  return arr;
}

ordered_json interval_json(const RationalInterval& iv) {
  return ordered_json::array({iv.lo().to_string(), iv.hi().to_string()});
}

Rational midpoint(const RationalInterval& iv) {
  return (iv.lo() + iv.hi()) / Rational(2);
}

}  // namespace

nlohmann::ordered_json solve_report_json(const SolveReport& report,
                                         const LinearMatrix& a) {
  ordered_json j;
  j["m"] = report.m;
  j["n"] = report.n;
  j["config"] = ordered_json{{"seed", report.config.seed},
                             {"coeff_bound", report.config.coeff_bound},
                             {"max_retries", report.config.max_retries},
                             {"digits", report.config.digits}};
  j["degree_sum"] = report.degree_sum;

  std::vector<bool> item_ok;
  bool all_ok = true;
  for (const auto& item : report.samples.items) {
    const bool ok = verify_on_determinant(item, a);
    item_ok.push_back(ok);
    all_ok = all_ok && ok;
  }
  j["verified"] = all_ok;

  j["samples"] = report.samples.to_json();

  ordered_json pts = ordered_json::array();
  for (const auto& p : extract_real_points(report.samples, report.config.digits)) {
    ordered_json pj;
    pj["item"] = p.item;
    pj["t"] = interval_json(p.t_interval);
    ordered_json box = ordered_json::array();
    ordered_json approx = ordered_json::array();
    for (const auto& iv : p.box) {
      box.push_back(interval_json(iv));
      approx.push_back(midpoint(iv).to_decimal(report.config.digits));
    }
    pj["box"] = box;
    pj["approx"] = approx;
    pj["on_determinant"] = static_cast<bool>(item_ok[static_cast<std::size_t>(p.item)]);
    pts.push_back(pj);
  }
  j["points"] = pts;

  ordered_json levels = ordered_json::array();
  for (const auto& lv : report.per_level) {
    ordered_json lj;
    lj["level"] = lv.level;
    lj["degree"] = lv.degree;
    lj["retries"] = lv.retries;
    if (lv.draw) {
      lj["draw"] = ordered_json{{"M", rational_matrix_json(lv.draw->M)},
                                {"u", rational_vector_json(lv.draw->u)},
                                {"v", rational_vector_json(lv.draw->v)},
                                {"t0", lv.draw->t0.to_string()}};
    } else {
      lj["draw"] = nullptr;
    }
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

std::string solve_report_text(const SolveReport& report, const LinearMatrix& a) {
  std::ostringstream out;
  out << "pencil: m=" << report.m << " n=" << report.n << "\n";
  out << "config: seed=" << report.config.seed
      << " coeff_bound=" << report.config.coeff_bound
      << " max_retries=" << report.config.max_retries
      << " digits=" << report.config.digits << "\n";
  out << "levels (deepest first):\n";
  for (const auto& lv : report.per_level) {
    out << "  level " << lv.level << ": degree " << lv.degree;
    if (lv.retries > 0) out << " after " << lv.retries << " redraw(s)";
    if (lv.draw) out << ", t0 = " << lv.draw->t0.to_string();
    out << "\n";
  }
  out << "degree sum: " << report.degree_sum << "\n";

  bool all_ok = true;
  for (const auto& item : report.samples.items) {
    all_ok = all_ok && verify_on_determinant(item, a);
  }
  out << "parametrizations: " << report.samples.items.size()
      << " item(s), determinant divisibility "
      << (all_ok ? "verified" : "FAILED") << "\n";

  const auto pts = extract_real_points(report.samples, report.config.digits);
  out << "real points (" << report.config.digits << " digits): " << pts.size()
      << "\n";
  for (const auto& p : pts) {
    out << "  x = (";
    for (std::size_t i = 0; i < p.box.size(); ++i) {
      if (i) out << ", ";
      out << midpoint(p.box[i]).to_decimal(report.config.digits);
    }
    out << ")  [item " << p.item << "]\n";
  }
  return out.str();
}

}  // namespace realdet
