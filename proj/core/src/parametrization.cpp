#include "realdet/parametrization.hpp"

#include <nlohmann/json.hpp>

#include "realdet/errors.hpp"

namespace realdet {

namespace {

nlohmann::json unipoly_to_json(const UniPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& entry : j) {
    if (entry.is_string()) {
      coeffs.push_back(Rational::parse(entry.get<std::string>()));
    } else if (entry.is_number_integer()) {
      coeffs.push_back(Rational(Integer(entry.get<long>())));
    } else {
      throw ParseError("polynomial coefficients must be integers or \"p/q\" strings");
    }
  }
  return UniPoly(std::move(coeffs));
}

UniPoly upow(const UniPoly& p, int e) {
  UniPoly out = UniPoly::constant(Rational(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalParametrization
// ---------------------------------------------------------------------------

void RationalParametrization::validate() const {
  if (ncoords < 0) throw PreconditionError("parametrization: negative coordinate count");
  if (static_cast<int>(q.size()) != ncoords) {
    throw PreconditionError("parametrization: coordinate count mismatch");
  }
  if (qlast.degree() < 0) {
    throw PreconditionError("parametrization: qlast must be nonzero");
  }
  if (qlast.leading_coeff().sign() < 0) {
    throw PreconditionError("parametrization: qlast must have positive leading coefficient");
  }
  if (qlast.degree() > 0) {
    if (!is_squarefree(qlast)) {
      throw PreconditionError("parametrization: qlast must be squarefree");
    }
    if (q0.degree() < 0) throw PreconditionError("parametrization: q0 must be nonzero");
    if (univ_gcd(q0, qlast).degree() > 0) {
      throw PreconditionError("parametrization: q0 and qlast must be coprime");
    }
  }
}

nlohmann::json RationalParametrization::to_json() const {
  nlohmann::json qs = nlohmann::json::array();
  for (const auto& p : q) qs.push_back(unipoly_to_json(p));
  return nlohmann::json{{"n", ncoords},
                        {"q0", unipoly_to_json(q0)},
                        {"q", std::move(qs)},
                        {"qlast", unipoly_to_json(qlast)}};
}

RationalParametrization RationalParametrization::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("q0") || !j.contains("q") ||
      !j.contains("qlast")) {
    throw ParseError("parametrization JSON must contain \"n\", \"q0\", \"q\", \"qlast\"");
  }
  RationalParametrization rp;
  if (!j["n"].is_number_integer()) throw ParseError("parametrization: \"n\" must be an integer");
  rp.ncoords = j["n"].get<int>();
  rp.q0 = unipoly_from_json(j["q0"]);
  if (!j["q"].is_array()) throw ParseError("parametrization: \"q\" must be an array");
  for (const auto& entry : j["q"]) rp.q.push_back(unipoly_from_json(entry));
  rp.qlast = unipoly_from_json(j["qlast"]);
  try {
    rp.validate();
  } catch (const PreconditionError& e) {
    // Invariant violations in serialized data are input errors.
    throw ParseError(e.what());
  }
  return rp;
}

// ---------------------------------------------------------------------------
// SampleSet
// ---------------------------------------------------------------------------

long SampleSet::degree_sum() const {
  long sum = 0;
  for (const auto& rp : items) sum += rp.degree();
  return sum;
}

nlohmann::json SampleSet::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rp : items) arr.push_back(rp.to_json());
  return arr;
}

SampleSet SampleSet::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("sample set JSON must be an array");
  SampleSet s;
  for (const auto& entry : j) s.items.push_back(RationalParametrization::from_json(entry));
  if (!s.items.empty()) {
    for (const auto& rp : s.items) {
      if (rp.ncoords != s.items.front().ncoords) {
        throw ParseError("sample set items have different coordinate counts");
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

RationalParametrization project(const RationalParametrization& rp,
                                const std::vector<int>& keep) {
  if (keep.empty()) throw PreconditionError("project: empty coordinate selection");
  RationalParametrization out;
  out.ncoords = static_cast<int>(keep.size());
  out.q0 = rp.q0;
  out.qlast = rp.qlast;
  for (int idx : keep) {
    if (idx < 0 || idx >= rp.ncoords) {
      throw PreconditionError("project: coordinate index out of range");
    }
    out.q.push_back(rp.q[static_cast<std::size_t>(idx)]);
  }
  return out;
}

RationalParametrization image(const RationalParametrization& rp,
                              const RationalMatrix& w) {
  if (static_cast<int>(w.size()) != rp.ncoords) {
    throw PreconditionError("image: matrix size does not match coordinate count");
  }
  for (const auto& row : w) {
    if (static_cast<int>(row.size()) != rp.ncoords) {
      throw PreconditionError("image: matrix is not square");
    }
  }
  if (rational_matrix_det(w).is_zero()) {
    throw PreconditionError("image: matrix is singular");
  }
  RationalParametrization out;
  out.ncoords = rp.ncoords;
  out.q0 = rp.q0;
  out.qlast = rp.qlast;
  out.q.assign(static_cast<std::size_t>(rp.ncoords), UniPoly());
  for (int i = 0; i < rp.ncoords; ++i) {
    UniPoly acc;
    for (int j = 0; j < rp.ncoords; ++j) {
      const Rational& c = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      UniPoly term = rp.q[static_cast<std::size_t>(j)];
      term *= c;
      acc = acc + term;
    }
    out.q[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

SampleSet sample_union(SampleSet a, SampleSet b) {
  if (!a.items.empty() && !b.items.empty() && a.ncoords() != b.ncoords()) {
    throw PreconditionError("sample_union: coordinate counts differ");
  }
  for (auto& rp : b.items) a.items.push_back(std::move(rp));
  return a;
}

RationalParametrization lift(const RationalParametrization& rp,
                             const Rational& t0, int position) {
  if (position < 0 || position > rp.ncoords) {
    throw PreconditionError("lift: position out of range");
  }
  RationalParametrization out;
  out.ncoords = rp.ncoords + 1;
  out.q0 = rp.q0;
  out.qlast = rp.qlast;
  out.q = rp.q;
  UniPoly inserted = rp.q0;
  inserted *= t0;
  out.q.insert(out.q.begin() + position, std::move(inserted));
  return out;
}

// ---------------------------------------------------------------------------
// Certified real-point extraction
// ---------------------------------------------------------------------------

namespace {

// Attempts to evaluate the coordinate box over the t-interval; succeeds when
// q0's interval excludes zero and every coordinate is narrower than tol.
bool try_box(const RationalParametrization& rp, const RationalInterval& t_iv,
             const Rational& tol, std::vector<RationalInterval>& box) {
  const RationalInterval q0_iv = rp.q0(t_iv);
  if (q0_iv.contains_zero()) return false;
  box.clear();
  box.reserve(rp.q.size());
  for (const auto& qi : rp.q) {
    RationalInterval c = qi(t_iv) / q0_iv;
    if (c.width() > tol) return false;
    box.push_back(std::move(c));
  }
  return true;
}

}  // namespace

std::vector<RealPointBox> extract_real_points(const RationalParametrization& rp,
                                              int digits) {
  if (digits < 1) throw PreconditionError("extract_real_points: digits must be >= 1");
  std::vector<RealPointBox> out;
  if (rp.degree() <= 0) return out;  // empty set

  Integer pow10(1);
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  const Rational tol(Integer(1), pow10);

  for (const RationalInterval& cell : sturm_isolate(rp.qlast)) {
    RationalInterval iv = cell;
    std::vector<RationalInterval> box;
    bool done = false;
    for (int attempt = 0; attempt < 64; ++attempt) {
      if (try_box(rp, iv, tol, box)) {
        done = true;
        break;
      }
      if (iv.is_point()) {
        // Exact rational root: the box is exact, so only a vanishing q0 can
        // keep failing, which the coprimality invariant rules out.
        throw PreconditionError("extract_real_points: q0 vanishes at a root of qlast");
      }
      iv = refine_root(rp.qlast, iv, iv.width() / Rational(16));
    }
    if (!done) {
      throw RefinementError("extract_real_points: refinement budget exhausted");
    }
    out.push_back(RealPointBox{iv, std::move(box), 0});
  }
  return out;
}

std::vector<RealPointBox> extract_real_points(const SampleSet& s, int digits) {
  std::vector<RealPointBox> out;
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    for (RealPointBox& b : extract_real_points(s.items[i], digits)) {
      b.item = static_cast<int>(i);
      out.push_back(std::move(b));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact membership verification
// ---------------------------------------------------------------------------

UniPoly substitute_parametrization(const RationalParametrization& rp,
                                   const MultiPoly& g) {
  if (g.nvars() != rp.ncoords) {
    throw PreconditionError("substitute_parametrization: variable count mismatch");
  }
  if (rp.degree() <= 0) return UniPoly();  // empty set solves everything
  const int deg = g.total_degree() < 0 ? 0 : static_cast<int>(g.total_degree());
  UniPoly acc;
  for (const auto& [mono, c] : g.terms()) {
    UniPoly term = UniPoly::constant(c);
    const auto& e = mono.exponents();
    std::int64_t total = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      total += e[v];
      if (e[v] > 0) term = term * upow(rp.q[v], e[v]);
    }
    term = term * upow(rp.q0, deg - static_cast<int>(total));
    acc = acc + term;
  }
  return divrem(acc, rp.qlast).second;
}

bool verify_on_determinant(const RationalParametrization& rp,
                           const LinearMatrix& a) {
  if (rp.ncoords != a.n) {
    throw PreconditionError("verify_on_determinant: coordinate count != n");
  }
  if (rp.degree() <= 0) return true;
  return substitute_parametrization(rp, determinant(a)).degree() < 0;
}

}  // namespace realdet
