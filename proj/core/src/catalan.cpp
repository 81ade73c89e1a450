#include "coxcat/catalan.hpp"

#include <algorithm>
#include <numeric>

namespace coxcat {

CoxeterElement coxeter_from_word(const WeylGroup& w, const std::vector<int>& word) {
  int n = w.root_system().rank();
  std::vector<bool> seen(n, false);
  if ((int)word.size() != n) throw coxcat_error("Coxeter word must use every simple once");
  for (int s : word) {
    if (s < 0 || s >= n || seen[s]) throw coxcat_error("Coxeter word must use every simple once");
    seen[s] = true;
  }
  CoxeterElement c;
  c.word = word;
  c.element = w.index_of(w.root_system().word_to_element(word));
  return c;
}

std::vector<CoxeterElement> enumerate_coxeter_elements(const WeylGroup& w) {
  int n = w.root_system().rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CoxeterElement> out;
  std::vector<char> got(w.size(), 0);
  do {
    CoxeterElement c = coxeter_from_word(w, perm);
    if (!got[c.element]) {
      got[c.element] = 1;
      out.push_back(c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool in_nc(const WeylGroup& w, int c, int u) {
  int rest = w.mul(w.inverse(u), c);
  return w.absolute_length(u) + w.absolute_length(rest) == w.absolute_length(c);
}

bool full_support(const WeylGroup& w, int u) {
  return (int)w.support(u).size() == w.root_system().rank();
}

NcLattice build_nc(const WeylGroup& w, const CoxeterElement& c) {
  NcLattice nc;
  nc.group = &w;
  nc.coxeter = c;
  nc.member.assign(w.size(), 0);
  for (int u = 0; u < w.size(); ++u)
    if (in_nc(w, c.element, u)) {
      nc.member[u] = 1;
      nc.elements.push_back(u);
    }
  std::sort(nc.elements.begin(), nc.elements.end(), [&](int a, int b) {
    int ta = w.absolute_length(a), tb = w.absolute_length(b);
    return ta != tb ? ta < tb : a < b;
  });
  for (int u : nc.elements)
    if (full_support(w, u)) nc.positive_subset.push_back(u);

  const RootSystem& rs = w.root_system();
  nc.kreweras.elements = nc.elements;
  nc.kreweras.bottom = w.index_of(rs.identity());
  nc.kreweras.top = c.element;
  for (int u : nc.elements) {
    for (int r = 0; r < rs.num_positive(); ++r) {
      int v = w.mul(u, w.reflection_index(r));  // right factor sigma with r(sigma) = r
      if (!nc.member[v]) continue;
      if (w.absolute_length(v) == w.absolute_length(u) + 1)
        nc.kreweras.edges.push_back({u, v, r});
    }
  }
  return nc;
}

std::vector<int> NcLattice::inv_nc(int u) const {
  const WeylGroup& w = *group;
  std::vector<int> out;
  for (int r : w.inversions(u)) {
    int tu = w.mul(w.reflection_index(r), u);
    if (member[tu]) out.push_back(r);
  }
  return out;
}

std::vector<int> NcLattice::clust_plus(int u) const {
  const WeylGroup& w = *group;
  const RootSystem& rs = w.root_system();
  if (!member[u]) throw coxcat_error("clust_plus: element is not noncrossing");
  std::vector<int> out;
  for (int r : inv_nc(u)) {
    const Element& tau = rs.reflection(r);
    Element conj = rs.mul(rs.mul(rs.inverse(w.element(u)), tau), w.element(u));
    out.push_back(rs.root_of_reflection(conj));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool strong_closure_check(const RootSystem& rs, const std::vector<int>& roots) {
  if (roots.size() > 20) throw coxcat_error("strong_closure_check: set too large");
  std::vector<char> in_set(rs.num_positive(), 0);
  for (int r : roots) in_set[r] = 1;
  int k = (int)roots.size();
  int n = rs.rank();
  for (int g = 0; g < rs.num_positive(); ++g) {
    if (in_set[g]) continue;
    QVec target = qvec_of(rs.positive_root(g));
    // feasibility of target = sum x_i roots_i, x >= 0: enumerate supports of
    // basic solutions (subsets of size <= n with independent columns)
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) > n) continue;
      QMat cols;  // n x |mask|
      std::vector<int> chosen;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) chosen.push_back(roots[i]);
      cols.assign(n, QVec(chosen.size(), Rat(0)));
      for (size_t j = 0; j < chosen.size(); ++j)
        for (int i = 0; i < n; ++i) cols[i][j] = Rat(rs.positive_root(chosen[j])[i]);
      auto sol = solve_linear(cols, target);
      if (!sol) continue;
      bool nonneg = true;
      for (auto& x : *sol)
        if (x < 0) { nonneg = false; break; }
      if (nonneg) return false;  // a root outside the set lies in the cone
    }
  }
  return true;
}

std::vector<IVec> cluster_complete_to_basis(const RootSystem& rs,
                                            const std::vector<int>& roots) {
  int n = rs.rank();
  int k = (int)roots.size();
  std::vector<IVec> result;
  for (int r : roots) result.push_back(rs.positive_root(r));
  if (k == 0) {
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      result.push_back(e);
    }
    return result;
  }
  QMat m = qmat(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) m[i][j] = Rat(result[j][i]);
  if (mat_rank(m) != k) throw coxcat_error("completion input is linearly dependent");
  if (k < n) {
    // rows spanning the rational orthogonal complement of the span
    QMat ortho = null_space(mat_transpose(m));
    std::vector<std::vector<Int>> nmat;
    for (auto& row : ortho) {
      IVec p = primitive_direction(row);
      nmat.push_back(std::vector<Int>(p.begin(), p.end()));
    }
    // preimages of an image-lattice basis of x -> N x split off the kernel;
    // column HNF with transform tracking
    int rows = (int)nmat.size();
    std::vector<std::vector<Int>> a = nmat;
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    int pc = 0;
    for (int r = 0; r < rows && pc < n; ++r) {
      while (true) {
        int nz = -1;
        for (int cc = pc; cc < n; ++cc)
          if (a[r][cc] != 0 && (nz < 0 || abs(a[r][cc]) < abs(a[r][nz]))) nz = cc;
        if (nz < 0) break;
        if (nz != pc) {
          for (int rr = 0; rr < rows; ++rr) std::swap(a[rr][nz], a[rr][pc]);
          for (int rr = 0; rr < n; ++rr) std::swap(u[rr][nz], u[rr][pc]);
        }
        bool done = true;
        for (int cc = pc + 1; cc < n; ++cc) {
          if (a[r][cc] == 0) continue;
          Int q = a[r][cc] / a[r][pc];
          if (q != 0) {
            for (int rr = 0; rr < rows; ++rr) a[rr][cc] -= q * a[rr][pc];
            for (int rr = 0; rr < n; ++rr) u[rr][cc] -= q * u[rr][pc];
          }
          if (a[r][cc] != 0) done = false;
        }
        if (done) break;
      }
      if (a[r][pc] != 0) ++pc;
    }
    if (pc != n - k) throw coxcat_error("completion rank bookkeeping failed");
    for (int cc = 0; cc < pc; ++cc) {
      IVec v(n);
      for (int i = 0; i < n; ++i) {
        if (!u[i][cc].fits_slong_p()) throw coxcat_error("completion overflow");
        v[i] = u[i][cc].get_si();
      }
      result.push_back(v);
    }
  }
  QMat full = qmat(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) full[i][j] = Rat(result[j][i]);
  Rat det = mat_det(full);
  if (det != 1 && det != -1)
    throw coxcat_error("input does not extend to a unimodular basis of the root lattice");
  return result;
}

}  // namespace coxcat
