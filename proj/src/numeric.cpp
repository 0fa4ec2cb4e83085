#include "mirrortoric/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace mirrortoric {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
  Rat b = e > 0 ? base : Rat(1) / base;
  long n = e > 0 ? e : -e;
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

bool is_integral(const Rat& r) { return rat_den(r) == 1; }

bool is_integral(const VecQ& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

Int floor_rat(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int n(s.substr(0, slash)), d(s.substr(slash + 1));
  return make_rat(n, d);
}

VecQ to_q(const VecZ& v) {
  VecQ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

VecZ to_z(const VecQ& v) {
  VecZ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw std::invalid_argument("to_z: non-integral entry " + rat_str(v[i]));
    out[i] = rat_num(v[i]);
  }
  return out;
}

namespace {
template <typename V>
V add_impl(const V& a, const V& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
  V out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}
template <typename V>
V sub_impl(const V& a, const V& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
  V out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}
template <typename V>
V neg_impl(const V& a) {
  V out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}
}  // namespace

VecZ add(const VecZ& a, const VecZ& b) { return add_impl(a, b); }
VecZ sub(const VecZ& a, const VecZ& b) { return sub_impl(a, b); }
VecZ neg(const VecZ& a) { return neg_impl(a); }
VecQ add(const VecQ& a, const VecQ& b) { return add_impl(a, b); }
VecQ sub(const VecQ& a, const VecQ& b) { return sub_impl(a, b); }
VecQ neg(const VecQ& a) { return neg_impl(a); }

VecQ scale(const Rat& c, const VecQ& a) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Int dot(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const VecZ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

bool is_zero(const VecZ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

VecZ primitive(const VecZ& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  VecZ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

VecZ primitive(const VecQ& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm_int(l, rat_den(x));
  VecZ scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) scaled[i] = rat_num(v[i]) * (l / rat_den(v[i]));
  return primitive(scaled);
}

MatZ MatZ::identity(int n) {
  MatZ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatZ MatZ::from_rows(const std::vector<VecZ>& rows) {
  if (rows.empty()) return MatZ(0, 0);
  MatZ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols)
      throw std::invalid_argument("MatZ::from_rows: ragged rows");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

MatZ MatZ::from_cols(const std::vector<VecZ>& cols) { return from_rows(cols).transposed(); }

MatZ MatZ::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<VecZ> rs;
  for (const auto& r : rows) {
    VecZ v(r.size());
    for (size_t i = 0; i < r.size(); ++i) v[i] = r[i];
    rs.push_back(std::move(v));
  }
  return from_rows(rs);
}

VecZ MatZ::row(int r) const {
  VecZ v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

VecZ MatZ::col(int c) const {
  VecZ v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

MatZ MatZ::transposed() const {
  MatZ m(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(c, r) = at(r, c);
  return m;
}

MatZ MatZ::operator*(const MatZ& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("MatZ multiply: dimension mismatch");
  MatZ m(rows, rhs.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < rhs.cols; ++c) m.at(r, c) += at(r, k) * rhs.at(k, c);
    }
  return m;
}

VecZ MatZ::apply(const VecZ& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("MatZ::apply: dimension mismatch");
  VecZ out(rows);
  for (int r = 0; r < rows; ++r) {
    Int s = 0;
    for (int c = 0; c < cols; ++c) s += at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

VecQ MatZ::apply(const VecQ& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("MatZ::apply: dimension mismatch");
  VecQ out(rows);
  for (int r = 0; r < rows; ++r) {
    Rat s = 0;
    for (int c = 0; c < cols; ++c) s += Rat(at(r, c)) * v[c];
    out[r] = s;
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination; returns the echelon rows, the
// pivot column per eliminated row, and leaves rational work to the callers.
namespace {
struct Echelon {
  std::vector<VecZ> rows;
  std::vector<int> pivot_cols;
};

Echelon bareiss(const std::vector<VecZ>& input, int n) {
  Echelon e;
  for (const auto& r : input) {
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("bareiss: ragged rows");
    e.rows.push_back(r);
  }
  Int prev = 1;
  int lead = 0;
  size_t rix = 0;
  while (rix < e.rows.size() && lead < n) {
    size_t piv = rix;
    while (piv < e.rows.size() && e.rows[piv][lead] == 0) ++piv;
    if (piv == e.rows.size()) {
      ++lead;
      continue;
    }
    std::swap(e.rows[rix], e.rows[piv]);
    const Int p = e.rows[rix][lead];
    for (size_t j = rix + 1; j < e.rows.size(); ++j) {
      const Int f = e.rows[j][lead];
      for (int c = 0; c < n; ++c) {
        Int t = p * e.rows[j][c] - f * e.rows[rix][c];
        e.rows[j][c] = t / prev;  // exact by Bareiss
      }
    }
    e.pivot_cols.push_back(lead);
    prev = p;
    ++rix;
    ++lead;
  }
  e.rows.resize(rix);
  return e;
}
}  // namespace

std::vector<VecZ> kernel_basis(const std::vector<VecZ>& rows, int n) {
  Echelon e = bareiss(rows, n);
  const int r = static_cast<int>(e.rows.size());
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<VecZ> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VecQ x(n, Rat(0));
    x[free] = 1;
    for (int i = r - 1; i >= 0; --i) {
      const int pc = e.pivot_cols[i];
      Rat s = 0;
      for (int c = pc + 1; c < n; ++c)
        if (x[c] != 0) s += Rat(e.rows[i][c]) * x[c];
      x[pc] = -s / Rat(e.rows[i][pc]);
    }
    VecZ v = primitive(x);
    for (const auto& entry : v) {
      if (entry != 0) {
        if (entry < 0) v = neg(v);
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<VecZ> kernel_basis(const MatZ& A) {
  std::vector<VecZ> rows;
  for (int r = 0; r < A.rows; ++r) rows.push_back(A.row(r));
  return kernel_basis(rows, A.cols);
}

int rank(const std::vector<VecQ>& rows) {
  if (rows.empty()) return 0;
  std::vector<VecQ> m = rows;
  const int n = static_cast<int>(m[0].size());
  int rk = 0, lead = 0;
  while (rk < static_cast<int>(m.size()) && lead < n) {
    int piv = rk;
    while (piv < static_cast<int>(m.size()) && m[piv][lead] == 0) ++piv;
    if (piv == static_cast<int>(m.size())) {
      ++lead;
      continue;
    }
    std::swap(m[rk], m[piv]);
    for (int j = rk + 1; j < static_cast<int>(m.size()); ++j) {
      if (m[j][lead] == 0) continue;
      Rat f = m[j][lead] / m[rk][lead];
      for (int c = lead; c < n; ++c) m[j][c] -= f * m[rk][c];
    }
    ++rk;
    ++lead;
  }
  return rk;
}

int rank(const std::vector<VecZ>& rows) {
  std::vector<VecQ> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.push_back(to_q(r));
  return rank(q);
}

SolveResult solve_linear(const std::vector<VecQ>& rows, const VecQ& rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
  if (rows.empty()) return {SolveStatus::underdetermined, {}};
  const int n = static_cast<int>(rows[0].size());
  std::vector<VecQ> m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    m[i] = rows[i];
    m[i].push_back(rhs[i]);
  }
  int rk = 0, lead = 0;
  std::vector<int> pivots;
  while (rk < static_cast<int>(m.size()) && lead < n) {
    int piv = rk;
    while (piv < static_cast<int>(m.size()) && m[piv][lead] == 0) ++piv;
    if (piv == static_cast<int>(m.size())) {
      ++lead;
      continue;
    }
    std::swap(m[rk], m[piv]);
    Rat p = m[rk][lead];
    for (int c = 0; c <= n; ++c) m[rk][c] /= p;
    for (int j = 0; j < static_cast<int>(m.size()); ++j) {
      if (j == rk || m[j][lead] == 0) continue;
      Rat f = m[j][lead];
      for (int c = 0; c <= n; ++c) m[j][c] -= f * m[rk][c];
    }
    pivots.push_back(lead);
    ++rk;
    ++lead;
  }
  for (int j = rk; j < static_cast<int>(m.size()); ++j)
    if (m[j][n] != 0) return {SolveStatus::inconsistent, {}};
  if (rk < n) return {SolveStatus::underdetermined, {}};
  VecQ x(n, Rat(0));
  for (int i = 0; i < rk; ++i) x[pivots[i]] = m[i][n];
  return {SolveStatus::unique, x};
}

SolveResult solve_linear(const std::vector<VecZ>& rows, const VecQ& rhs) {
  std::vector<VecQ> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.push_back(to_q(r));
  return solve_linear(q, rhs);
}

std::optional<std::vector<VecQ>> inverse(const std::vector<VecQ>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<VecQ> m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("inverse: not square");
    m[i] = rows[i];
    for (int j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    Rat p = m[col][col];
    for (int c = 0; c < 2 * n; ++c) m[col][c] /= p;
    for (int j = 0; j < n; ++j) {
      if (j == col || m[j][col] == 0) continue;
      Rat f = m[j][col];
      for (int c = 0; c < 2 * n; ++c) m[j][c] -= f * m[col][c];
    }
  }
  std::vector<VecQ> inv(n, VecQ(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

std::string vec_str(const VecZ& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string vec_str(const VecQ& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

}  // namespace mirrortoric
