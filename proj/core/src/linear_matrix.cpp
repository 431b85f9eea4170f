#include "realdet/linear_matrix.hpp"

#include <nlohmann/json.hpp>

#include "realdet/errors.hpp"

namespace realdet {

// ---------------------------------------------------------------------------
// Rational matrix helpers
// ---------------------------------------------------------------------------

Rational rational_matrix_det(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix w = a;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(w[pivot], w[col]);
      det = -det;
    }
    det *= w[col][col];
    const Rational inv = Rational(1) / w[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (w[row][col].is_zero()) continue;
      const Rational factor = w[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) {
        w[row][k] -= factor * w[col][k];
      }
    }
  }
  return det;
}

RationalMatrix rational_matrix_inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix w = a;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw PreconditionError("matrix inverse of singular matrix");
    std::swap(w[pivot], w[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = Rational(1) / w[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      w[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || w[row][col].is_zero()) continue;
      const Rational factor = w[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        w[row][k] -= factor * w[col][k];
        inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// LinearMatrix
// ---------------------------------------------------------------------------

void LinearMatrix::validate() const {
  if (m < 1) throw ParseError("linear matrix: m must be >= 1");
  if (n < 1) throw ParseError("linear matrix: n must be >= 1");
  if (static_cast<int>(A.size()) != n + 1) {
    throw ParseError("linear matrix: expected n+1 coefficient matrices");
  }
  for (const auto& mat : A) {
    if (static_cast<int>(mat.size()) != m) {
      throw ParseError("linear matrix: coefficient matrix has wrong row count");
    }
    for (const auto& row : mat) {
      if (static_cast<int>(row.size()) != m) {
        throw ParseError("linear matrix: coefficient matrix has wrong column count");
      }
    }
  }
}

nlohmann::json LinearMatrix::to_json() const {
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& mat : A) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : mat) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& entry : row) r.push_back(entry.to_string());
      rows.push_back(std::move(r));
    }
    mats.push_back(std::move(rows));
  }
  return nlohmann::json{{"m", m}, {"n", n}, {"A", std::move(mats)}};
}

LinearMatrix LinearMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("A")) {
    throw ParseError("linear matrix JSON must contain \"m\", \"n\" and \"A\"");
  }
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer() || !j["A"].is_array()) {
    throw ParseError("linear matrix JSON has wrong field types");
  }
  LinearMatrix lm;
  lm.m = j["m"].get<int>();
  lm.n = j["n"].get<int>();
  for (const auto& mat : j["A"]) {
    if (!mat.is_array()) throw ParseError("linear matrix coefficient must be a matrix");
    RationalMatrix rows;
    for (const auto& row : mat) {
      if (!row.is_array()) throw ParseError("linear matrix row must be an array");
      std::vector<Rational> r;
      for (const auto& entry : row) {
        if (entry.is_string()) {
          r.push_back(Rational::parse(entry.get<std::string>()));
        } else if (entry.is_number_integer()) {
          r.push_back(Rational(Integer(entry.get<long>())));
        } else {
          throw ParseError("linear matrix entries must be integers or \"p/q\" strings");
        }
      }
      rows.push_back(std::move(r));
    }
    lm.A.push_back(std::move(rows));
  }
  lm.validate();
  return lm;
}

MultiPoly determinant(const LinearMatrix& a) {
  a.validate();
  std::vector<std::vector<MultiPoly>> entries(
      static_cast<std::size_t>(a.m),
      std::vector<MultiPoly>(static_cast<std::size_t>(a.m), MultiPoly(a.n)));
  for (int i = 0; i < a.m; ++i) {
    for (int j = 0; j < a.m; ++j) {
      MultiPoly e = MultiPoly::constant(a.n, a.A[0][i][j]);
      for (int k = 1; k <= a.n; ++k) {
        Monomial mono(a.n);
        mono[k - 1] = 1;
        e.add_term(mono, a.A[static_cast<std::size_t>(k)][i][j]);
      }
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
    }
  }
  return detail::poly_matrix_determinant(entries);
}

LinearMatrix change_of_variables(const LinearMatrix& a, const RationalMatrix& m) {
  a.validate();
  if (static_cast<int>(m.size()) != a.n) {
    throw PreconditionError("change_of_variables: matrix must be n x n");
  }
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != a.n) {
      throw PreconditionError("change_of_variables: matrix must be n x n");
    }
  }
  // A(Mx) = A0 + sum_j A_j (Mx)_j  =>  B_k = sum_j M[j][k] * A_j.
  LinearMatrix b;
  b.m = a.m;
  b.n = a.n;
  b.A.assign(static_cast<std::size_t>(a.n) + 1,
             RationalMatrix(static_cast<std::size_t>(a.m),
                            std::vector<Rational>(static_cast<std::size_t>(a.m), Rational(0))));
  b.A[0] = a.A[0];
  for (int k = 1; k <= a.n; ++k) {
    for (int j = 1; j <= a.n; ++j) {
      const Rational& scale = m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
      if (scale.is_zero()) continue;
      for (int r = 0; r < a.m; ++r) {
        for (int c = 0; c < a.m; ++c) {
          b.A[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
              scale * a.A[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
      }
    }
  }
  return b;
}

LinearMatrix substitute_x1(const LinearMatrix& a, const Rational& t0) {
  a.validate();
  if (a.n < 2) throw PreconditionError("substitute_x1 requires n >= 2");
  LinearMatrix b;
  b.m = a.m;
  b.n = a.n - 1;
  b.A.reserve(static_cast<std::size_t>(b.n) + 1);
  RationalMatrix a0 = a.A[0];
  for (int r = 0; r < a.m; ++r) {
    for (int c = 0; c < a.m; ++c) {
      a0[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
          t0 * a.A[1][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  b.A.push_back(std::move(a0));
  for (int k = 2; k <= a.n; ++k) b.A.push_back(a.A[static_cast<std::size_t>(k)]);
  return b;
}

// ---------------------------------------------------------------------------
// Polynomial systems
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> block_names(int n, int m, int nz) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  for (int i = 1; i <= nz; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

void check_u(const LinearMatrix& a, const std::vector<Rational>& u) {
  if (static_cast<int>(u.size()) != a.m + 1) {
    throw PreconditionError("incidence system: u must have m+1 entries");
  }
  if (u.back().is_zero()) {
    throw PreconditionError("incidence system: u_{m+1} must be nonzero");
  }
  bool head_nonzero = false;
  for (int i = 0; i < a.m; ++i) head_nonzero = head_nonzero || !u[static_cast<std::size_t>(i)].is_zero();
  if (!head_nonzero) {
    throw PreconditionError("incidence system: (u1..um) must be nonzero");
  }
}

// Rows of A(x)*y inside a ring with nvars variables, x block at offset 0,
// y block at offset n.
std::vector<MultiPoly> matrix_times_y(const LinearMatrix& a, int nvars) {
  std::vector<MultiPoly> rows;
  rows.reserve(static_cast<std::size_t>(a.m));
  for (int r = 0; r < a.m; ++r) {
    MultiPoly row(nvars);
    for (int c = 0; c < a.m; ++c) {
      // Constant part times y_c.
      Monomial y(nvars);
      y[a.n + c] = 1;
      row.add_term(y, a.A[0][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      // x_k * y_c terms.
      for (int k = 1; k <= a.n; ++k) {
        const Rational& coeff = a.A[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (coeff.is_zero()) continue;
        Monomial xy(nvars);
        xy[k - 1] = 1;
        xy[a.n + c] = 1;
        row.add_term(xy, coeff);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PolySystem incidence_system(const LinearMatrix& a, const std::vector<Rational>& u) {
  a.validate();
  check_u(a, u);
  PolySystem sys;
  sys.nvars = a.n + a.m;
  sys.blocks = {a.n, a.m};
  sys.names = block_names(a.n, a.m, 0);
  sys.polys = matrix_times_y(a, sys.nvars);
  MultiPoly urow = MultiPoly::constant(sys.nvars, -u.back());
  for (int i = 0; i < a.m; ++i) {
    Monomial y(sys.nvars);
    y[a.n + i] = 1;
    urow.add_term(y, u[static_cast<std::size_t>(i)]);
  }
  sys.polys.push_back(std::move(urow));
  return sys;
}

PolySystem fiber_system(const LinearMatrix& a, const std::vector<Rational>& u,
                        const Rational& t0) {
  PolySystem sys = incidence_system(a, u);
  MultiPoly fiber = MultiPoly::variable(sys.nvars, 0);
  fiber += MultiPoly::constant(sys.nvars, -t0);
  sys.polys.push_back(std::move(fiber));
  return sys;
}

std::vector<std::vector<MultiPoly>> jacobian_matrix(
    const std::vector<MultiPoly>& polys, const std::vector<int>& vars) {
  std::vector<std::vector<MultiPoly>> jac;
  jac.reserve(polys.size());
  for (const auto& p : polys) {
    std::vector<MultiPoly> row;
    row.reserve(vars.size());
    for (int v : vars) row.push_back(partial_derivative(p, v));
    jac.push_back(std::move(row));
  }
  return jac;
}

PolySystem lagrange_system(const LinearMatrix& a, const RationalMatrix& m,
                           const std::vector<Rational>& u,
                           const std::vector<Rational>& v) {
  a.validate();
  if (a.n < 2) throw PreconditionError("lagrange_system requires n >= 2");
  if (static_cast<int>(v.size()) != a.m + 1) {
    throw PreconditionError("lagrange_system: v must have m+1 entries");
  }
  bool v_nonzero = false;
  for (const auto& entry : v) v_nonzero = v_nonzero || !entry.is_zero();
  if (!v_nonzero) throw PreconditionError("lagrange_system: v must be nonzero");

  const LinearMatrix b = change_of_variables(a, m);
  const PolySystem inc = incidence_system(b, u);  // in n+m variables

  const int nvars = a.n + 2 * a.m + 1;
  PolySystem sys;
  sys.nvars = nvars;
  sys.blocks = {a.n, a.m, a.m + 1};
  sys.names = block_names(a.n, a.m, a.m + 1);

  // Incidence polynomials, re-embedded into the bigger ring (the z block is
  // appended after the existing variables, so exponent vectors just extend).
  for (const auto& p : inc.polys) {
    MultiPoly lifted(nvars);
    for (const auto& [mono, c] : p.terms()) {
      std::vector<std::int32_t> e = mono.exponents();
      e.resize(static_cast<std::size_t>(nvars), 0);
      lifted.add_term(Monomial(std::move(e)), c);
    }
    sys.polys.push_back(std::move(lifted));
  }

  // Jacobian of the incidence system with respect to (x2..xn, y1..ym).
  std::vector<int> jac_vars;
  for (int i = 1; i < a.n; ++i) jac_vars.push_back(i);
  for (int i = 0; i < a.m; ++i) jac_vars.push_back(a.n + i);
  const auto jac = jacobian_matrix(sys.polys, jac_vars);  // (m+1) x (n+m-1)

  // Transposed-Jacobian kernel conditions J'z: one polynomial per column.
  for (std::size_t col = 0; col < jac_vars.size(); ++col) {
    MultiPoly p(nvars);
    for (int row = 0; row <= a.m; ++row) {
      MultiPoly z = MultiPoly::variable(nvars, a.n + a.m + row);
      p += jac[static_cast<std::size_t>(row)][col] * z;
    }
    sys.polys.push_back(std::move(p));
  }

  // Kernel vector normalization v'z = 1.
  MultiPoly vrow = MultiPoly::constant(nvars, Rational(-1));
  for (int i = 0; i <= a.m; ++i) {
    Monomial z(nvars);
    z[a.n + a.m + i] = 1;
    vrow.add_term(z, v[static_cast<std::size_t>(i)]);
  }
  sys.polys.push_back(std::move(vrow));
  return sys;
}

// ---------------------------------------------------------------------------
// Random draws
// ---------------------------------------------------------------------------

namespace {

Rational random_entry(long bound, Rng& rng) {
  return Rational(Integer(static_cast<long>(rng.range(-bound, bound))));
}

}  // namespace

RandomDraw RandomDraw::draw(int m, int n, long bound, Rng& rng) {
  if (bound < 1) throw PreconditionError("random draw: bound must be >= 1");
  RandomDraw d;
  // Invertible change of variables.
  do {
    d.M.assign(static_cast<std::size_t>(n),
               std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (auto& row : d.M) {
      for (auto& e : row) e = random_entry(bound, rng);
    }
  } while (rational_matrix_det(d.M).is_zero());
  // u: nonzero head vector, nonzero affine constant.
  for (;;) {
    d.u.assign(static_cast<std::size_t>(m) + 1, Rational(0));
    for (auto& e : d.u) e = random_entry(bound, rng);
    bool head = false;
    for (int i = 0; i < m; ++i) head = head || !d.u[static_cast<std::size_t>(i)].is_zero();
    if (head && !d.u.back().is_zero()) break;
  }
  // v: any nonzero vector.
  for (;;) {
    d.v.assign(static_cast<std::size_t>(m) + 1, Rational(0));
    for (auto& e : d.v) e = random_entry(bound, rng);
    bool nonzero = false;
    for (const auto& e : d.v) nonzero = nonzero || !e.is_zero();
    if (nonzero) break;
  }
  d.t0 = random_entry(bound, rng);
  return d;
}

LinearMatrix random_pencil(int m, int n, long bound, Rng& rng) {
  if (m < 1 || n < 1) throw PreconditionError("random pencil: m, n must be >= 1");
  LinearMatrix lm;
  lm.m = m;
  lm.n = n;
  lm.A.assign(static_cast<std::size_t>(n) + 1,
              RationalMatrix(static_cast<std::size_t>(m),
                             std::vector<Rational>(static_cast<std::size_t>(m), Rational(0))));
  for (auto& mat : lm.A) {
    for (auto& row : mat) {
      for (auto& e : row) e = random_entry(bound, rng);
    }
  }
  return lm;
}

}  // namespace realdet
