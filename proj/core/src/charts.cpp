#include "coxcat/charts.hpp"

#include "coxcat/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxcat {

namespace {

// row label <-> index maps; labels are 1..n+1 (A), -n..n (B), -n..-1,1..n (C/D)
int row_index(GroupType t, int n, long label) {
  switch (t) {
    case GroupType::A: return (int)label - 1;
    case GroupType::B: return (int)label + n;
    default: return label < 0 ? (int)label + n : (int)label + n - 1;
  }
}

long row_label(GroupType t, int n, int idx) {
  switch (t) {
    case GroupType::A: return idx + 1;
    case GroupType::B: return idx - n;
    default: return idx < n ? idx - n : idx - n + 1;
  }
}

struct Fp {
  uint64_t p;
  uint32_t add(uint32_t a, uint32_t b) const { return (uint32_t)(((uint64_t)a + b) % p); }
  uint32_t sub(uint32_t a, uint32_t b) const { return (uint32_t)(((uint64_t)a + p - b) % p); }
  uint32_t mul(uint32_t a, uint32_t b) const { return (uint32_t)((uint64_t)a * b % p); }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : (uint32_t)(p - a); }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return (uint32_t)r;
  }
  uint32_t inv(uint32_t a) const { return pow(a, p - 2); }
};

uint32_t det_mod_p(std::vector<std::vector<uint32_t>> m, const Fp& f) {
  int k = (int)m.size();
  uint32_t det = 1;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    uint32_t inv = f.inv(m[c][c]);
    for (int r = c + 1; r < k; ++r) {
      if (m[r][c] == 0) continue;
      uint32_t factor = f.mul(m[r][c], inv);
      for (int cc = c; cc < k; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(factor, m[c][cc]));
    }
  }
  return det;
}

long mirror_label(long l) { return -l; }

std::mt19937_64 stream_rng(uint64_t seed, uint64_t a, uint64_t b) {
  // splitmix-style mixing for independent per-(cell, trial) streams
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return std::mt19937_64(z ^ (z >> 31));
}

}  // namespace

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    if (p == d) return true;
    if (p % d == 0) return false;
  }
  // deterministic Miller-Rabin for 32-bit inputs
  uint32_t d = p - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  Fp f{p};
  for (uint32_t a : {2u, 3u, 5u, 7u}) {
    uint32_t x = f.pow(a % p, d);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = f.mul(x, x);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ChartPattern schubert_chart(const WeylGroup& w, int welem) {
  const RootSystem& rs = w.root_system();
  if (!rs.classical()) throw coxcat_error("matrix charts require a classical type");
  GroupType t = rs.type();
  int n = rs.rank();
  IVec ol = rs.one_line(w.element(welem));

  ChartPattern p;
  p.type = t;
  p.rank = n;
  p.welem = welem;
  if (t == GroupType::A) {
    p.rows = n + 1;
    p.cols = n + 1;
  } else if (t == GroupType::B) {
    p.rows = 2 * n + 1;
    p.cols = n;
  } else {
    p.rows = 2 * n;
    p.cols = n;
  }
  p.shape.assign(p.rows, std::vector<CellSym>(p.cols, CellSym::Zero));

  // place the ones: type A at (w(i), i); B/C/D at (w(-j), column of -j)
  std::vector<int> one_row(p.cols);
  for (int c = 0; c < p.cols; ++c) {
    long label = (t == GroupType::A) ? ol[c] : -ol[n - 1 - c];
    one_row[c] = row_index(t, n, label);
    p.shape[one_row[c]][c] = CellSym::One;
  }
  // stars: cells with no 1 to the left in their row and no 1 above in their column
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) {
      if (p.shape[r][c] == CellSym::One) continue;
      bool blocked = false;
      for (int cc = 0; cc < c && !blocked; ++cc)
        if (one_row[cc] == r) blocked = true;
      if (!blocked && one_row[c] < r) blocked = true;  // below the 1 of this column
      if (!blocked) p.shape[r][c] = CellSym::Star;
    }
  // crosses: stars weakly (B/D) or strictly (C) to the right of the mirror
  // position of each column's 1
  if (t != GroupType::A) {
    for (int c = 0; c < p.cols; ++c) {
      long m = mirror_label(-ol[n - 1 - c]);  // = ol[n-1-c]
      if (t == GroupType::B && m == 0) continue;
      int mr = row_index(t, n, m);
      int from = (t == GroupType::C) ? c + 1 : c;
      for (int cc = from; cc < p.cols; ++cc)
        if (p.shape[mr][cc] == CellSym::Star) p.shape[mr][cc] = CellSym::Cross;
    }
  }
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c)
      if (p.shape[r][c] == CellSym::Star) p.stars.push_back({r, c});
  if (p.star_count() != w.length(welem))
    throw coxcat_error("pattern star count does not match the length");
  return p;
}

int star_reflection_root(const WeylGroup& w, const ChartPattern& p, int row, int col) {
  const RootSystem& rs = w.root_system();
  int n = rs.rank();
  IVec ol = rs.one_line(w.element(p.welem));
  int amb = rs.ambient_dim();
  auto vec_of_label = [&](long l) {
    QVec v(amb, Rat(0));
    if (l != 0) v[std::abs(l) - 1] = (l > 0) ? 1 : -1;
    return v;
  };
  QVec root_amb(amb, Rat(0));
  if (p.type == GroupType::A) {
    // star at (r, c): root e_{r+1} - e_{w(c+1)}
    root_amb = vec_of_label(row + 1) - vec_of_label(ol[col]);
  } else {
    long r_label = row_label(p.type, n, row);
    long one_label = -ol[n - 1 - col];
    root_amb = vec_of_label(r_label) - vec_of_label(one_label);
  }
  // convert to root coordinates and look up
  const QMat& S = rs.datum().simple_roots;
  QMat SB = mat_mul(S, rs.datum().bilinear);
  QMat gram = mat_mul(SB, mat_transpose(S));
  QVec coords = mat_vec(mat_mul(*mat_inverse(gram), SB), root_amb);
  IVec iv(n);
  for (int k = 0; k < n; ++k) {
    if (coords[k].get_den() != 1) throw coxcat_error("star root is not integral");
    iv[k] = (long)coords[k].get_num().get_si();
  }
  int idx = rs.root_index(iv);
  if (idx < 0) throw coxcat_error("star position does not correspond to a root");
  return idx;
}

ChartPattern nc_cell_chart(const WeylGroup& w, const NcLattice& nc, int u) {
  if (!nc.contains(u)) throw coxcat_error("nc_cell_chart: element is not noncrossing");
  ChartPattern p = schubert_chart(w, u);
  std::vector<int> keep = nc.inv_nc(u);
  std::set<int> keep_set(keep.begin(), keep.end());
  std::vector<std::pair<int, int>> new_stars;
  for (auto [r, c] : p.stars) {
    int root = star_reflection_root(w, p, r, c);
    if (keep_set.count(root)) {
      new_stars.push_back({r, c});
    } else {
      p.shape[r][c] = CellSym::Zero;
    }
  }
  p.stars = new_stars;
  if (p.star_count() != (int)keep.size())
    throw coxcat_error("NC pattern star count does not match |Inv_NC|");

  return p;
}

std::vector<std::string> render_pattern(const ChartPattern& p) {
  std::vector<std::string> out;
  for (int r = 0; r < p.rows; ++r) {
    std::string line;
    for (int c = 0; c < p.cols; ++c) {
      switch (p.shape[r][c]) {
        case CellSym::Zero: line += '.'; break;
        case CellSym::One: line += '1'; break;
        case CellSym::Star: line += '*'; break;
        case CellSym::Cross: line += 'x'; break;
      }
    }
    out.push_back(line);
  }
  return out;
}

namespace {

// Full pairing of two (known) columns under the type's bilinear form:
// B: a0 b0 + sum_{k>0} (a_k b_{-k} + a_{-k} b_k)
// C: sum_{k>0} (a_k b_{-k} - a_{-k} b_k)
// D: sum_{k>0} (a_k b_{-k} + a_{-k} b_k)
uint32_t pairing_value(GroupType t, int n, const std::vector<std::vector<uint32_t>>& m, int ca,
                       int cb, const Fp& f) {
  // full pairing of columns ca, cb (both fully known)
  uint64_t acc = 0;
  int rows = (int)m.size();
  for (int r = 0; r < rows; ++r) {
    long l = row_label(t, n, r);
    if (l == 0) {
      acc = (acc + (uint64_t)m[r][ca] * m[r][cb]) % f.p;
      continue;
    }
    int mr = row_index(t, n, -l);
    uint64_t term = (uint64_t)m[r][ca] * m[mr][cb] % f.p;
    if (t == GroupType::C && l < 0) term = f.p - term;  // minus a_{-k} b_k
    if (t == GroupType::C && l > 0) term = term;        // plus a_k b_{-k}
    acc = (acc + term) % f.p;
  }
  return (uint32_t)(acc % f.p);
}

}  // namespace

FiniteFieldPoint sample_point(const WeylGroup& w, const ChartPattern& p, uint32_t prime,
                              std::mt19937_64& rng) {
  if (!is_prime_u32(prime)) throw coxcat_error("sample_point: modulus is not prime");
  if (prime <= 2u * (uint32_t)p.rows) throw coxcat_error("sample_point: prime too small");
  Fp f{prime};
  FiniteFieldPoint pt;
  pt.prime = prime;
  pt.mat.assign(p.rows, std::vector<uint32_t>(p.cols, 0));
  std::vector<std::vector<char>> known(p.rows, std::vector<char>(p.cols, 1));
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) switch (p.shape[r][c]) {
        case CellSym::Zero: pt.mat[r][c] = 0; break;
        case CellSym::One: pt.mat[r][c] = 1; break;
        case CellSym::Star: pt.mat[r][c] = (uint32_t)(rng() % prime); break;
        case CellSym::Cross: known[r][c] = 0; break;
      }
  if (p.type == GroupType::A) return pt;

  int n = p.rank;
  GroupType t = p.type;
  for (int c = 0; c < p.cols; ++c) {
    std::vector<int> unknown_rows;
    for (int r = p.rows - 1; r >= 0; --r)
      if (!known[r][c]) unknown_rows.push_back(r);  // bottom-to-top
    if (unknown_rows.empty()) continue;

    // equations: pairings with earlier columns, plus self-isotropy in B/D
    struct Eq {
      int other;  // earlier column, or -1 for self
    };
    std::vector<Eq> eqs;
    for (int cb = 0; cb < c; ++cb) eqs.push_back({cb});
    if (t != GroupType::C) eqs.push_back({-1});

    auto solve_pass = [&]() -> bool {
      for (const auto& eq : eqs) {
        // build const + sum coeff * x_r over unresolved cells in column c
        uint64_t cst = 0;
        std::map<int, uint64_t> coeff;  // row -> coefficient
        bool blocked = false;
        if (eq.other >= 0) {
          for (int r = 0; r < p.rows; ++r) {
            long l = row_label(t, n, r);
            // term a_{mirror(l)} (other col) * b_l (this col), with C signs
            uint32_t a = pt.mat[l == 0 ? r : row_index(t, n, -l)][eq.other];
            uint64_t sgn_a = a;
            if (t == GroupType::C && l < 0) sgn_a = f.neg(a);
            if (!known[r][c]) {
              coeff[r] = (coeff[r] + sgn_a) % prime;
            } else {
              cst = (cst + (uint64_t)sgn_a * pt.mat[r][c]) % prime;
            }
          }
        } else {
          // self-isotropy: B: b0^2 + 2 sum_{k>0} b_k b_{-k}; D: sum b_k b_{-k}
          for (int r = 0; r < p.rows; ++r) {
            long l = row_label(t, n, r);
            if (l == 0) {
              if (!known[r][c]) { blocked = true; break; }  // would need a sqrt
              cst = (cst + (uint64_t)pt.mat[r][c] * pt.mat[r][c]) % prime;
              continue;
            }
            if (l < 0) continue;  // count each mirror pair once via l > 0
            int rm = row_index(t, n, -l);
            uint32_t two = (t == GroupType::B) ? 2 : 1;
            bool ku = known[r][c], kv = known[rm][c];
            if (ku && kv) {
              cst = (cst + (uint64_t)two * pt.mat[r][c] % prime * pt.mat[rm][c]) % prime;
            } else if (ku && !kv) {
              coeff[rm] = (coeff[rm] + (uint64_t)two * pt.mat[r][c]) % prime;
            } else if (!ku && kv) {
              coeff[r] = (coeff[r] + (uint64_t)two * pt.mat[rm][c]) % prime;
            } else {
              blocked = true;  // quadratic in two unknowns
              break;
            }
          }
        }
        if (blocked) continue;
        int live = 0, live_row = -1;
        for (auto& [r, cf] : coeff)
          if (cf % prime != 0) {
            ++live;
            live_row = r;
          }
        if (live != 1) continue;
        uint32_t cf = (uint32_t)(coeff[live_row] % prime);
        uint32_t val = f.mul(f.neg((uint32_t)(cst % prime)), f.inv(cf));
        pt.mat[live_row][c] = val;
        known[live_row][c] = 1;
        return true;
      }
      return false;
    };

    int remaining = (int)unknown_rows.size();
    while (remaining > 0) {
      if (!solve_pass())
        throw coxcat_error("cross system is not uniquely triangular-solvable");
      --remaining;
    }
  }

  // full verification of isotropy
  for (int ca = 0; ca < p.cols; ++ca) {
    for (int cb = ca + (t == GroupType::C ? 1 : 0); cb < p.cols; ++cb) {
      if (pairing_value(t, n, pt.mat, ca, cb, f) != 0)
        throw coxcat_error("sampled point violates isotropy");
    }
  }
  return pt;
}

uint32_t plucker_coordinate(const WeylGroup& w, const FiniteFieldPoint& pt, int welem) {
  const RootSystem& rs = w.root_system();
  GroupType t = rs.type();
  int n = rs.rank();
  Fp f{pt.prime};
  IVec ol = rs.one_line(w.element(welem));
  uint32_t result = 1;
  int max_k = (t == GroupType::A) ? n : (t == GroupType::D ? n - 1 : n);
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> rows;
    if (t == GroupType::A) {
      for (int i = 0; i < k; ++i) rows.push_back((int)ol[i] - 1);
    } else {
      for (int i = 0; i < k; ++i) rows.push_back(row_index(t, n, -ol[n - 1 - i]));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::vector<uint32_t>> minor(k, std::vector<uint32_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = pt.mat[rows[i]][j];
    result = f.mul(result, det_mod_p(std::move(minor), f));
    if (result == 0) return 0;
  }
  return result;
}

std::vector<uint32_t> plucker_vector(const WeylGroup& w, const FiniteFieldPoint& pt) {
  std::vector<uint32_t> out(w.size());
  for (int i = 0; i < w.size(); ++i) out[i] = plucker_coordinate(w, pt, i);
  return out;
}

PluckerReport verify_plucker_vanishing(const WeylGroup& w, const NcLattice& nc, uint32_t prime,
                                       int trials, uint64_t seed) {
  PluckerReport rep;
  rep.cells = (int)nc.elements.size();
  struct CellResult {
    long long det_failures = 0, top_nonzero = 0, spurious = 0;
    bool fixed_ok = true;
    std::vector<std::string> failures;
  };
  std::vector<CellResult> results(nc.elements.size());
  const RootSystem& rs = w.root_system();

  parallel_for((int)nc.elements.size(), [&](int ci) {
    int u = nc.elements[ci];
    CellResult& res = results[ci];
    ChartPattern pat = nc_cell_chart(w, nc, u);
    // cut set for the Prop-style check: Inv(u) \ Inv_NC(u)
    std::vector<int> inv = w.inversions(u);
    std::vector<int> keep_v = nc.inv_nc(u);
    std::set<int> keep(keep_v.begin(), keep_v.end());
    std::vector<int> cut;
    for (int r : inv)
      if (!keep.count(r)) cut.push_back(r);

    // torus-fixed coset: all stars zero
    {
      ChartPattern fz = pat;
      for (auto [r, c] : fz.stars) fz.shape[r][c] = CellSym::Zero;
      fz.stars.clear();
      std::mt19937_64 rng0 = stream_rng(seed, ci, 1u << 20);
      FiniteFieldPoint fixed = sample_point(w, fz, prime, rng0);
      auto pl = plucker_vector(w, fixed);
      for (int x = 0; x < w.size(); ++x) {
        bool want_nonzero = (x == u);
        if ((pl[x] != 0) != want_nonzero) {
          res.fixed_ok = false;
          res.failures.push_back("fixed-point coset Pl mismatch at cell " +
                                 rs.one_line_string(w.element(u)));
          break;
        }
      }
    }

    for (int trial = 0; trial < trials; ++trial) {
      std::mt19937_64 rng = stream_rng(seed, ci, trial);
      FiniteFieldPoint point = sample_point(w, pat, prime, rng);
      auto pl = plucker_vector(w, point);
      for (int x = 0; x < w.size(); ++x) {
        if (!nc.contains(x) && pl[x] != 0) {
          ++res.det_failures;
          res.failures.push_back("Pl_" + rs.one_line_string(w.element(x)) +
                                 " nonzero on cell " + rs.one_line_string(w.element(u)));
        }
        if (nc.contains(x) && x != u && pl[x] == 0) ++res.spurious;
      }
      for (int r : cut) {
        int tu = w.mul(w.reflection_index(r), u);
        if (pl[tu] != 0) {
          ++res.det_failures;
          res.failures.push_back("Pl_{tau u} nonzero for cut reflection on cell " +
                                 rs.one_line_string(w.element(u)));
        }
      }
      if (pl[u] != 0) ++res.top_nonzero;
    }
  });

  for (const auto& r : results) {
    rep.samples += trials;
    rep.deterministic_failures += r.det_failures;
    rep.top_nonzero += r.top_nonzero;
    rep.spurious_vanishing += r.spurious;
    if (!r.fixed_ok) rep.fixed_point_check = false;
    for (const auto& m : r.failures)
      if (rep.failures.size() < 32) rep.failures.push_back(m);
  }
  return rep;
}

FiniteFieldPoint sample_product_point(const WeylGroup& w, int welem,
                                      const std::vector<int>& inversion_roots, uint32_t prime,
                                      std::mt19937_64& rng) {
  const RootSystem& rs = w.root_system();
  if (rs.type() != GroupType::A)
    throw coxcat_error("product parametrization implemented for type A only");
  Fp f{prime};
  int n = rs.rank();
  int dim = n + 1;
  IVec ol = rs.one_line(w.element(welem));
  std::vector<std::vector<uint32_t>> m(dim, std::vector<uint32_t>(dim, 0));
  for (int c = 0; c < dim; ++c) m[(int)ol[c] - 1][c] = 1;  // the permutation matrix
  // left-multiply by e_beta(a) = I + a E_{ij} for each root e_i - e_j
  for (int r : inversion_roots) {
    QVec amb = rs.root_ambient(r);
    int i = -1, j = -1;
    for (int k = 0; k < dim; ++k) {
      if (amb[k] == 1) i = k;
      if (amb[k] == -1) j = k;
    }
    if (i < 0 || j < 0) throw coxcat_error("not a type-A root");
    uint32_t a = (uint32_t)(rng() % prime);
    // row_i += a * row_j
    for (int c = 0; c < dim; ++c) m[i][c] = f.add(m[i][c], f.mul(a, m[j][c]));
  }
  FiniteFieldPoint pt;
  pt.prime = prime;
  pt.mat = std::move(m);
  return pt;
}

bool reduce_to_pattern(const ChartPattern& p, FiniteFieldPoint& pt) {
  Fp f{pt.prime};
  int rows = p.rows, cols = p.cols;
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = rows - 1; r >= 0; --r)
      if (pt.mat[r][c] != 0) { pivot = r; break; }
    if (pivot < 0 || p.shape[pivot][c] != CellSym::One) return false;
    uint32_t inv = f.inv(pt.mat[pivot][c]);
    for (int r = 0; r < rows; ++r) pt.mat[r][c] = f.mul(pt.mat[r][c], inv);
    for (int cc = c + 1; cc < cols; ++cc) {
      uint32_t factor = pt.mat[pivot][cc];
      if (factor == 0) continue;
      for (int r = 0; r < rows; ++r)
        pt.mat[r][cc] = f.sub(pt.mat[r][cc], f.mul(factor, pt.mat[r][c]));
    }
  }
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (p.shape[r][c] == CellSym::Zero && pt.mat[r][c] != 0) return false;
      if (p.shape[r][c] == CellSym::One && pt.mat[r][c] != 1) return false;
    }
  return true;
}

}  // namespace coxcat
