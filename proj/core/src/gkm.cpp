#include "coxcat/gkm.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxcat {

int GkmGraph::slot(int e) const {
  if (e < 0 || e >= (int)position.size() || position[e] < 0)
    throw coxcat_error("element is not a vertex of the GKM graph");
  return position[e];
}

GkmGraph cayley_graph(const WeylGroup& w) {
  GkmGraph g;
  g.group = &w;
  g.position.assign(w.size(), -1);
  for (int i = 0; i < w.size(); ++i) {
    g.position[i] = i;
    g.vertices.push_back(i);
  }
  for (int r = 0; r < w.num_reflections(); ++r) {
    int refl = w.reflection_index(r);
    for (int v = 0; v < w.size(); ++v) {
      int tv = w.mul(refl, v);
      if (v < tv) g.edges.push_back({v, tv, r});
    }
  }
  return g;
}

GkmGraph nc_cayley_graph(const NcLattice& nc) {
  const WeylGroup& w = *nc.group;
  GkmGraph g;
  g.group = &w;
  g.position.assign(w.size(), -1);
  // linear extension of Bruhat order: sort by (length, index)
  std::vector<int> order = nc.elements;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return w.length(a) != w.length(b) ? w.length(a) < w.length(b) : a < b;
  });
  for (int i = 0; i < (int)order.size(); ++i) {
    g.position[order[i]] = i;
    g.vertices.push_back(order[i]);
  }
  // induced Cayley subgraph = Kreweras Hasse diagram; label by the left
  // reflection's root r(tau) for the edge {u, tau u}
  for (int r = 0; r < w.num_reflections(); ++r) {
    int refl = w.reflection_index(r);
    for (int v : nc.elements) {
      int tv = w.mul(refl, v);
      if (!nc.contains(tv) || v >= tv) continue;
      g.edges.push_back({g.position[v], g.position[tv], r});
    }
  }
  return g;
}

bool is_gkm_class(const RootSystem& rs, const GkmGraph& g, const GkmClass& f, std::string* why) {
  for (const auto& e : g.edges) {
    IntPoly diff = f.values[e.a] - f.values[e.b];
    IVec form(rs.positive_root(e.label_root).begin(), rs.positive_root(e.label_root).end());
    if (!diff.divisible_by_linear(form)) {
      if (why)
        *why = "edge " + rs.one_line_string(g.group->element(g.vertices[e.a])) + " -- " +
               rs.one_line_string(g.group->element(g.vertices[e.b]));
      return false;
    }
  }
  return true;
}

GkmClass gkm_add(const GkmClass& a, const GkmClass& b) {
  GkmClass r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

GkmClass gkm_mul(const GkmClass& a, const GkmClass& b) {
  GkmClass r = a;
  for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] * b.values[i];
  return r;
}

GkmClass gkm_scale(const IntPoly& c, const GkmClass& a) {
  GkmClass r = a;
  for (auto& v : r.values) v = v * c;
  return r;
}

GkmClass gkm_constant(const GkmGraph& g, int nvars, const Int& c) {
  GkmClass r;
  r.values.assign(g.vertices.size(), IntPoly::constant(nvars, c));
  return r;
}

std::vector<GkmClass> schubert_classes(const WeylGroup& w) {
  const RootSystem& rs = w.root_system();
  int n = rs.rank();
  int N = w.size();
  std::vector<GkmClass> S(N);
  for (auto& s : S) s.values.assign(N, IntPoly(n));

  IntPoly top = IntPoly::constant(n, 1);
  for (int r = 0; r < rs.num_positive(); ++r)
    top = top * IntPoly::linear_form(rs.positive_root(r));
  S[w.w0()].values[w.w0()] = top;

  // order by decreasing length; elements are sorted by length already
  for (int y = N - 1; y >= 0; --y) {
    if (y == w.w0()) continue;
    // find an ascent s of y: ell(y s) > ell(y); then S_y = d_s S_{y s}
    int s = -1, ys = -1;
    for (int i = 0; i < n; ++i) {
      if (w.length(w.right(y, i)) > w.length(y)) {
        s = i;
        ys = w.right(y, i);
        break;
      }
    }
    if (s < 0) throw coxcat_error("non-longest element without an ascent");
    const GkmClass& f = S[ys];
    GkmClass out;
    out.values.assign(N, IntPoly(n));
    for (int v = 0; v < N; ++v) {
      int vs = w.right(v, s);
      // t_{v(alpha_s)}: signed root form
      IVec a(n, 0);
      a[s] = 1;
      IVec img = rs.act_root_coords(w.element(v), a);
      IntPoly diff = f.values[vs] - f.values[v];
      auto q = diff.divide_by_linear(img);
      if (!q) throw coxcat_error("divided difference is not exact (convention bug)");
      out.values[v] = *q;
    }
    S[y] = std::move(out);
  }
  return S;
}

RationalFn equivariant_multiplicity(const WeylGroup& w, const LatticePolytope& p, int v) {
  const RootSystem& rs = w.root_system();
  int n = rs.rank();
  if (p.dim == 0) return RationalFn::one(n);

  auto simplices = apex_triangulation(p, v);

  // lattice of the affine span: Z Phi cap span, from the primitive directions
  std::vector<IVec> dirs;
  for (size_t i = 0; i < p.points.size(); ++i) {
    if ((int)i == v) continue;
    QVec d(n);
    for (int k = 0; k < n; ++k) d[k] = p.points[i][k] - p.points[v][k];
    dirs.push_back(primitive_direction(d));
  }
  auto lattice = saturation_basis(dirs, n);  // n-dim vectors, p.dim of them
  if ((int)lattice.size() != p.dim) throw coxcat_error("span lattice rank mismatch");
  QMat latmat = qmat(n, p.dim);
  for (int j = 0; j < p.dim; ++j)
    for (int k = 0; k < n; ++k) latmat[k][j] = Rat(lattice[j][k]);

  RationalFn total = RationalFn::zero(n);
  for (const auto& simplex : simplices) {
    // generators: primitive directions from v to the other simplex vertices
    std::vector<IVec> gens;
    for (int idx : simplex) {
      if (idx == v) continue;
      QVec d(n);
      for (int k = 0; k < n; ++k) d[k] = p.points[idx][k] - p.points[v][k];
      gens.push_back(primitive_direction(d));
    }
    if ((int)gens.size() != p.dim) throw coxcat_error("degenerate cone in triangulation");
    // multiplicity: |det| of generators in the span lattice basis
    QMat coords = qmat(p.dim, p.dim);
    for (int j = 0; j < p.dim; ++j) {
      auto sol = solve_linear(latmat, qvec_of(gens[j]));
      if (!sol) throw coxcat_error("cone generator outside the span lattice");
      for (int k = 0; k < p.dim; ++k) {
        if ((*sol)[k].get_den() != 1)
          throw coxcat_error("cone generator not integral in the span lattice");
        coords[k][j] = (*sol)[k];
      }
    }
    Rat det = mat_det(coords);
    Int mult = abs(det.get_num());
    // simplicial cone with primitive generators g_i and index m contributes
    // m / prod t_{g_i}: the fundamental parallelepiped holds m lattice points
    std::vector<IVec> forms(gens.begin(), gens.end());
    total += RationalFn(IntPoly::constant(n, mult)) * RationalFn::reciprocal(n, forms, 1);
  }
  return total;
}

// ---------------------------------------------------------------------------

NcCohomology::NcCohomology(const Cambrian& cam, const QVec& lambda)
    : w_(&cam.group()), lambda_(lambda) {
  CoxeterElement cox;
  cox.word = cam.coxeter_word();
  cox.element = cam.coxeter();
  nc_ = build_nc(*w_, cox);
  graph_ = nc_cayley_graph(nc_);
  build_pieces(cam);
  build_flowup();
  build_duality();
}

void NcCohomology::build_pieces(const Cambrian& cam) {
  int N = (int)graph_.vertices.size();
  pieces_.reserve(N);
  for (int i = 0; i < N; ++i) {
    int u = graph_.vertices[i];
    ParabolicRepresentative rep = representative_for(*w_, nc_, u);
    pieces_.push_back(moment_polytope(*w_, rep.interval_elements, lambda_));
  }
  emult_.assign(N, std::vector<RationalFn>(N));
  for (int j = 0; j < N; ++j) {
    const LatticePolytope& P = pieces_[j];
    for (size_t vi = 0; vi < P.vertex_elems.size(); ++vi) {
      int slot = graph_.slot(P.vertex_elems[vi]);
      emult_[j][slot] = equivariant_multiplicity(*w_, P, (int)vi);
    }
  }
}

RationalFn NcCohomology::integrate(int j, const GkmClass& f) const {
  int n = w_->root_system().rank();
  RationalFn total = RationalFn::zero(n);
  for (int i = 0; i < (int)graph_.vertices.size(); ++i) {
    if (emult_[j][i].is_zero()) continue;
    total += emult_[j][i] * RationalFn(f.values[i]);
  }
  return total;
}

void NcCohomology::build_flowup() {
  const RootSystem& rs = w_->root_system();
  int n = rs.rank();
  int N = (int)graph_.vertices.size();

  // lower-edge data per vertex slot: edges to earlier slots (Bruhat-lower)
  std::vector<std::vector<std::pair<int, int>>> lower(N);  // (slot, root)
  for (const auto& e : graph_.edges) {
    int lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
    lower[hi].push_back({lo, e.label_root});
  }

  flowup_.assign(N, GkmClass{});
  for (auto& f : flowup_) f.values.assign(N, IntPoly(n));

  for (int i = 0; i < N; ++i) {
    // the new class: zero below, product of lower edge labels at u_i
    IntPoly lead = IntPoly::constant(n, 1);
    for (auto& [slot, r] : lower[i])
      lead = lead * IntPoly::linear_form(rs.positive_root(r));
    flowup_[i].values[i] = lead;
    if (i == 0) continue;

    // extend earlier classes to the new vertex by monomial matching in a
    // basis completing the lower edge labels
    std::vector<int> label_roots;
    for (auto& [slot, r] : lower[i]) label_roots.push_back(r);
    std::sort(label_roots.begin(), label_roots.end());
    label_roots.erase(std::unique(label_roots.begin(), label_roots.end()), label_roots.end());
    if ((int)lower[i].size() != (int)label_roots.size())
      throw coxcat_error("repeated edge label at a vertex");
    auto basis = cluster_complete_to_basis(rs, label_roots);
    int m = (int)label_roots.size();

    // change of variables: t_k = sum_j C[j][k] t'_j with alpha_k = sum C[j][k] b_j
    QMat bm = qmat(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) bm[k][j] = Rat(basis[j][k]);
    QMat binv = *mat_inverse(bm);
    std::vector<IntPoly> to_prime(n), from_prime(n);
    for (int k = 0; k < n; ++k) {
      IVec row(n);
      for (int j = 0; j < n; ++j) {
        Rat c = binv[j][k];
        if (c.get_den() != 1) throw coxcat_error("basis change not integral");
        row[j] = (long)c.get_num().get_si();
      }
      to_prime[k] = IntPoly::linear_form(row);  // t_k in terms of t'_j
      from_prime[k] = IntPoly::linear_form(IVec(basis[k].begin(), basis[k].end()));
    }

    // neighbor slots aligned with the primed variables t'_0..t'_{m-1}
    std::vector<int> nb_slot(m, -1);
    for (int r = 0; r < m; ++r)
      for (auto& [slot, root] : lower[i])
        if (root == label_roots[r]) nb_slot[r] = slot;

    for (int j = 0; j < i; ++j) {
      std::vector<IntPoly> vals(m);
      for (int r = 0; r < m; ++r)
        vals[r] = flowup_[j].values[nb_slot[r]].substitute(to_prime);
      // union of constrained monomials
      std::map<ExpVec, Int> assembled;
      for (int r = 0; r < m; ++r)
        for (auto& [e, c] : vals[r].terms())
          if (e[r] == 0) assembled[e] = c;
      // full pairwise consistency: every neighbor with e[r] == 0 must agree
      for (auto& [e, c] : assembled)
        for (int r = 0; r < m; ++r)
          if (e[r] == 0 && vals[r].coeff(e) != c)
            throw coxcat_error("flowup interpolation is inconsistent");
      IntPoly hprime(n);
      for (auto& [e, c] : assembled) {
        IntPoly mono = IntPoly::constant(n, c);
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < e[k]; ++p) mono = mono * IntPoly::variable(n, k);
        hprime += mono;
      }
      flowup_[j].values[i] = hprime.substitute(from_prime);
    }
  }

  // all flowup elements must be classes
  std::string why;
  for (int i = 0; i < N; ++i)
    if (!is_gkm_class(rs, graph_, flowup_[i], &why))
      throw coxcat_error("flowup construction produced a non-class at " + why);
}

void NcCohomology::build_duality() {
  const RootSystem& rs = w_->root_system();
  int n = rs.rank();
  int N = (int)graph_.vertices.size();

  // M[j][k] = integral over Y_j of flowup k; unipotent lower triangular
  std::vector<std::vector<IntPoly>> M(N, std::vector<IntPoly>(N, IntPoly(n)));
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      RationalFn v = integrate(j, flowup_[k]);
      if (!v.is_polynomial())
        throw coxcat_error("integral of a flowup class is not polynomial");
      M[j][k] = v.as_polynomial();
      if (j == k && !(M[j][k] == IntPoly::constant(n, 1)))
        throw coxcat_error("localization normalization failed on the diagonal");
      if (k > j && !M[j][k].is_zero())
        throw coxcat_error("localization matrix is not lower triangular");
    }

  // Minv = sum (I - M)^p
  std::vector<std::vector<IntPoly>> Ninv(N, std::vector<IntPoly>(N, IntPoly(n)));
  std::vector<std::vector<IntPoly>> Npow(N, std::vector<IntPoly>(N, IntPoly(n)));
  for (int i = 0; i < N; ++i) {
    Ninv[i][i] = IntPoly::constant(n, 1);
    Npow[i][i] = IntPoly::constant(n, 1);
  }
  std::vector<std::vector<IntPoly>> Nmat(N, std::vector<IntPoly>(N, IntPoly(n)));
  bool nilpotent_zero = true;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Nmat[i][j] = (i == j ? IntPoly(n) : -M[i][j]);
      if (!Nmat[i][j].is_zero()) nilpotent_zero = false;
    }
  if (!nilpotent_zero) {
    for (int p = 1; p < N; ++p) {
      std::vector<std::vector<IntPoly>> next(N, std::vector<IntPoly>(N, IntPoly(n)));
      bool any = false;
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
          if (Npow[i][k].is_zero()) continue;
          for (int j = 0; j < N; ++j) {
            if (Nmat[k][j].is_zero()) continue;
            next[i][j] += Npow[i][k] * Nmat[k][j];
          }
        }
      Npow = std::move(next);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (Npow[i][j].is_zero()) continue;
          Ninv[i][j] += Npow[i][j];
          any = true;
        }
      if (!any) break;
    }
  }

  duality_.assign(N, GkmClass{});
  for (int k = 0; k < N; ++k) {
    duality_[k].values.assign(N, IntPoly(n));
    for (int v = 0; v < N; ++v)
      for (int i = 0; i < N; ++i) {
        if (flowup_[i].values[v].is_zero() || Ninv[i][k].is_zero()) continue;
        duality_[k].values[v] += flowup_[i].values[v] * Ninv[i][k];
      }
  }

  std::string why;
  for (int k = 0; k < N; ++k)
    if (!is_gkm_class(rs, graph_, duality_[k], &why))
      throw coxcat_error("duality basis element is not a class at " + why);
}

std::vector<int> NcCohomology::betti() const {
  int n = w_->root_system().rank();
  std::vector<int> b(n + 1, 0);
  int maxdim = 0;
  for (int i = 0; i < (int)graph_.vertices.size(); ++i) {
    int u = graph_.vertices[i];
    int d = (int)nc_.clust_plus(u).size();
    b[d]++;
    maxdim = std::max(maxdim, d);
    // cross-check against the flowup degree
    const IntPoly& lead = flowup_[i].values[i];
    if (lead.total_degree() != d)
      throw coxcat_error("flowup degree histogram disagrees with cluster sizes");
  }
  b.resize(maxdim + 1);
  return b;
}

std::vector<IntPoly> NcCohomology::expand_in_duality(const GkmClass& f) const {
  const RootSystem& rs = w_->root_system();
  int n = rs.rank();
  int N = (int)graph_.vertices.size();
  std::vector<IntPoly> coeff(N, IntPoly(n));
  GkmClass rem = f;
  for (int i = 0; i < N; ++i) {
    // remaining basis elements vanish at u_i except duality_[i] itself
    IntPoly val = rem.values[i];
    if (val.is_zero()) continue;
    // divide by the leading product of root forms
    IntPoly lead = duality_[i].values[i];
    IntPoly q = val;
    for (int r : nc_.inv_nc(graph_.vertices[i])) {
      IVec form(rs.positive_root(r).begin(), rs.positive_root(r).end());
      auto qq = q.divide_by_linear(form);
      if (!qq) throw coxcat_error("expansion coefficient is not polynomial (basis bug)");
      q = *qq;
    }
    (void)lead;
    coeff[i] = q;
    rem = gkm_add(rem, gkm_scale(-q, duality_[i]));
  }
  for (auto& v : rem.values)
    if (!v.is_zero()) throw coxcat_error("duality expansion left a nonzero remainder");
  return coeff;
}

GkmClass NcCohomology::restrict_class(const std::vector<GkmClass>& schubert, int welem) const {
  GkmClass out;
  int N = (int)graph_.vertices.size();
  out.values.resize(N);
  for (int i = 0; i < N; ++i) out.values[i] = schubert[welem].values[graph_.vertices[i]];
  return out;
}

std::vector<int> flag_betti(const WeylGroup& w) {
  std::vector<int> b;
  for (int i = 0; i < w.size(); ++i) {
    int l = w.length(i);
    if ((int)b.size() <= l) b.resize(l + 1, 0);
    b[l]++;
  }
  return b;
}

GkmClass psi_apply(const NcLattice& src, const GkmGraph& src_graph, const NcLattice& dst,
                   const GkmGraph& dst_graph, int w_elem, const GkmClass& f) {
  const WeylGroup& w = *src.group;
  const RootSystem& rs = w.root_system();
  int n = rs.rank();
  // c' = w c w^{-1} must be the destination Coxeter element
  int conj = w.mul(w.mul(w_elem, src.coxeter.element), w.inverse(w_elem));
  if (conj != dst.coxeter.element)
    throw coxcat_error("psi: destination lattice does not match w c w^{-1}");

  // substitution t_k -> t_{w(alpha_k)}
  std::vector<IntPoly> images(n);
  for (int k = 0; k < n; ++k) {
    IVec a(n, 0);
    a[k] = 1;
    images[k] = IntPoly::linear_form(rs.act_root_coords(w.element(w_elem), a));
  }
  GkmClass out;
  out.values.resize(dst_graph.vertices.size());
  int winv = w.inverse(w_elem);
  for (size_t i = 0; i < dst_graph.vertices.size(); ++i) {
    int v = dst_graph.vertices[i];
    int pre = w.mul(w.mul(winv, v), w_elem);  // w^{-1} v w in NC(W,c)
    out.values[i] = f.values[src_graph.slot(pre)].substitute(images);
  }
  return out;
}

}  // namespace coxcat
