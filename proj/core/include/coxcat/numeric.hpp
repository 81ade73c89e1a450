// Exact arithmetic primitives shared across the library: GMP integer/rational
// scalars, dense vectors/matrices over Q, and the handful of lattice
// computations (rank, solve, integer kernel, saturation) that the root-system
// and polytope code needs.  Everything here is small and exact; no floating
// point appears anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcat {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<long>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline QMat qmat(int rows, int cols) { return QMat(rows, QVec(cols, Rat(0))); }

inline QMat qidentity(int n) {
  QMat m = qmat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QVec qvec_of(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat((long)v[i]);
  return r;
}

inline QVec operator+(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec operator*(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline bool is_zero(const QVec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == v.size());
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  }
  return r;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat r(n, QVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    assert(a[i].size() == k);
    for (size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (size_t j = 0; j < m; ++j)
          if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
  }
  return r;
}

inline QMat mat_transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat r(a[0].size(), QVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

// Row echelon form in place; returns rank.  Columns processed left to right.
inline int row_reduce(QMat& m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat p = m[rank][c];
    for (int j = c; j < cols; ++j) m[rank][j] /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline int mat_rank(QMat m) { return row_reduce(m); }

// Fraction-free rank of a small integer matrix (Bareiss); entries must stay
// within __int128 during elimination, which holds comfortably for the
// rank <= 8 reflection matrices this is used on.
inline int int_mat_rank(std::vector<std::vector<long>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m[i][j];
  int rank = 0;
  __int128 prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j)
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline Rat mat_det(QMat m) {
  int n = (int)m.size();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) { std::swap(m[c], m[piv]); det = -det; }
    det *= m[c][c];
    Rat p = m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / p;
      for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Solves A x = b exactly; empty result if inconsistent.  A need not be square.
inline std::optional<QVec> solve_linear(QMat a, QVec b) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  for (int r = 0; r < rows; ++r) a[r].push_back(b[r]);
  row_reduce(a);
  QVec x(cols, Rat(0));
  for (int r = rows - 1; r >= 0; --r) {
    int lead = -1;
    for (int c = 0; c < cols; ++c)
      if (a[r][c] != 0) { lead = c; break; }
    if (lead < 0) {
      if (a[r][cols] != 0) return std::nullopt;
      continue;
    }
    Rat v = a[r][cols];
    for (int c = lead + 1; c < cols; ++c) v -= a[r][c] * x[c];
    x[lead] = v / a[r][lead];
  }
  return x;
}

inline std::optional<QMat> mat_inverse(const QMat& a) {
  int n = (int)a.size();
  QMat m(n, QVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  if (row_reduce(m) != n) return std::nullopt;
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Basis of {x in Q^cols : A x = 0}.
inline QMat null_space(QMat a) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  row_reduce(a);
  std::vector<int> lead(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    if (a[r][c] != 0) { lead[c] = r; ++r; }
  }
  QMat basis;
  for (int c = 0; c < cols; ++c) {
    if (lead[c] >= 0) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (int cc = 0; cc < cols; ++cc)
      if (lead[cc] >= 0) v[cc] = -a[lead[cc]][c];
    basis.push_back(v);
  }
  return basis;
}

inline long ivec_gcd(const IVec& v) {
  long g = 0;
  for (long x : v) g = (long)std::gcd(g, std::abs(x));
  return g;
}

// Scales a rational vector to a primitive integer vector (same ray).
inline IVec primitive_direction(const QVec& v) {
  Int lcm = 1;
  for (auto& x : v) {
    Int d = x.get_den();
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Int> w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat y = v[i] * Rat(lcm);
    w[i] = y.get_num();
    g = gcd(g, w[i]);
  }
  IVec r(v.size(), 0);
  if (g == 0) return r;
  for (size_t i = 0; i < v.size(); ++i) {
    Int q = w[i] / g;
    assert(q.fits_slong_p());
    r[i] = q.get_si();
  }
  return r;
}

// Column-style Hermite reduction with unimodular bookkeeping:
// returns a Z-basis of {x in Z^cols : A x = 0}.
inline std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> a) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  if (rows == 0) return {};
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;
  int pivot_col = 0;
  for (int r = 0; r < rows && pivot_col < cols; ++r) {
    // Euclid across columns pivot_col..cols-1 on row r.
    while (true) {
      int nz = -1;
      for (int c = pivot_col; c < cols; ++c)
        if (a[r][c] != 0) { nz = (nz < 0 || abs(a[r][c]) < abs(a[r][nz])) ? c : nz; }
      if (nz < 0) break;
      if (nz != pivot_col) {
        for (int rr = 0; rr < rows; ++rr) std::swap(a[rr][nz], a[rr][pivot_col]);
        for (int rr = 0; rr < cols; ++rr) std::swap(u[rr][nz], u[rr][pivot_col]);
      }
      bool done = true;
      for (int c = pivot_col + 1; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        Int q = a[r][c] / a[r][pivot_col];  // truncated division is fine here
        if (q != 0) {
          for (int rr = 0; rr < rows; ++rr) a[rr][c] -= q * a[rr][pivot_col];
          for (int rr = 0; rr < cols; ++rr) u[rr][c] -= q * u[rr][pivot_col];
        }
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][pivot_col] != 0) ++pivot_col;
  }
  std::vector<std::vector<Int>> kernel;
  for (int c = pivot_col; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (a[r][c] != 0) { zero = false; break; }
    if (!zero) continue;
    std::vector<Int> v(cols);
    for (int r = 0; r < cols; ++r) v[r] = u[r][c];
    kernel.push_back(v);
  }
  return kernel;
}

// Z-basis of (Q-span of the given integer vectors) intersected with Z^n.
// Computed as the integer kernel of an integer matrix whose rows span the
// orthogonal complement of the span.
inline std::vector<std::vector<Int>> saturation_basis(const std::vector<IVec>& gens, int n) {
  QMat g;
  for (auto& v : gens) g.push_back(qvec_of(v));
  QMat ortho = null_space(std::move(g));  // rows y with <y, gens> = 0
  if (ortho.empty()) {
    std::vector<std::vector<Int>> id(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  std::vector<std::vector<Int>> a;
  for (auto& row : ortho) {
    IVec p = primitive_direction(row);
    std::vector<Int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i];
    a.push_back(r);
  }
  return integer_kernel(std::move(a));
}

struct coxcat_error : std::runtime_error {
  explicit coxcat_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace coxcat
