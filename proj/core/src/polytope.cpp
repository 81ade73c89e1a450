#include "coxcat/polytope.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace coxcat {

QVec default_lambda(const RootSystem& rs) {
  int amb = rs.ambient_dim();
  QVec lambda(amb, Rat(0));
  switch (rs.type()) {
    case GroupType::A:
      for (int i = 0; i < amb; ++i) lambda[i] = amb - 1 - i;
      break;
    case GroupType::B:
    case GroupType::C:
      for (int i = 0; i < amb; ++i) lambda[i] = i + 1;
      break;
    case GroupType::D:
      for (int i = 0; i < amb; ++i) lambda[i] = i;
      break;
    default: {
      // any solution of (lambda, alpha_i^vee) = 1 for all simples
      QMat sys;
      QVec rhs;
      for (int i = 0; i < rs.rank(); ++i) {
        QVec row(amb, Rat(0));
        QVec ai(rs.datum().simple_roots[i].begin(), rs.datum().simple_roots[i].end());
        Rat nrm = rs.form(ai, ai);
        for (int k = 0; k < amb; ++k) {
          QVec e(amb, Rat(0));
          e[k] = 1;
          row[k] = 2 * rs.form(e, ai) / nrm;
        }
        sys.push_back(row);
        rhs.push_back(Rat(1));
      }
      auto sol = solve_linear(sys, rhs);
      if (!sol) throw coxcat_error("no regular dominant weight found");
      lambda = *sol;
      break;
    }
  }
  require_regular_dominant(rs, lambda);
  return lambda;
}

void require_regular_dominant(const RootSystem& rs, const QVec& lambda) {
  for (int r = 0; r < rs.num_positive(); ++r)
    if (rs.pairing_covec(lambda, r) <= 0)
      throw coxcat_error("weight is not regular dominant");
}

int LatticePolytope::index_of_elem(int elem) const {
  for (size_t i = 0; i < vertex_elems.size(); ++i)
    if (vertex_elems[i] == elem) return (int)i;
  throw coxcat_error("element is not a vertex of the polytope");
}

std::vector<int> LatticePolytope::edges_at(int v) const {
  std::vector<int> out;
  for (const auto& f : faces) {
    if (f.dim != 1) continue;
    if (f.verts.size() != 2) continue;
    if (f.verts[0] == v) out.push_back(f.verts[1]);
    if (f.verts[1] == v) out.push_back(f.verts[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LatticePolytope::contains(const QVec& x, bool strictly) const {
  // membership in the affine span first
  QMat sys;
  for (int k = 0; k < nvars; ++k) {
    QVec row;
    for (size_t j = 1; j < points.size(); ++j) row.push_back(points[j][k] - points[0][k]);
    sys.push_back(row);
  }
  QVec rhs(nvars);
  for (int k = 0; k < nvars; ++k) rhs[k] = x[k] - points[0][k];
  auto sol = solve_linear(sys, rhs);
  if (!sol) return false;
  if (strictly && dim < nvars) return false;  // no interior in the ambient sense
  for (const auto& f : facets) {
    Rat v(0);
    for (int k = 0; k < nvars; ++k) v += f.normal_root[k] * (x[k] - points[0][k]);
    // offset is stated in span coordinates relative to points[0]
    if (strictly ? (v >= f.offset) : (v > f.offset)) return false;
  }
  return true;
}

QVec LatticePolytope::centroid() const {
  QVec c(nvars, Rat(0));
  for (const auto& p : points) c = c + p;
  Rat inv = Rat(1) / Rat((long)points.size());
  return inv * c;
}

namespace {

// coordinates of (p - origin) in the rows of basis_map
QVec to_span_coords(const QMat& basis_map, const QVec& p, const QVec& origin) {
  QVec d(p.size());
  for (size_t k = 0; k < p.size(); ++k) d[k] = p[k] - origin[k];
  return mat_vec(basis_map, d);
}

void enumerate_facets(LatticePolytope& P) {
  int d = P.dim;
  int V = (int)P.span_points.size();
  if (d == 0) return;
  std::set<std::vector<int>> seen;
  std::vector<int> idx(d);
  // iterate over all d-subsets of vertices
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0 && comb[i] == V - d + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  do {
    // hyperplane through the chosen points: normal in the null space of the
    // difference matrix
    QMat diffs;
    for (int i = 1; i < d; ++i) {
      QVec row(d);
      for (int k = 0; k < d; ++k)
        row[k] = P.span_points[comb[i]][k] - P.span_points[comb[0]][k];
      diffs.push_back(row);
    }
    if (d == 1) diffs.push_back(QVec(1, Rat(0)));
    QMat null = null_space(diffs);
    if (null.size() != 1) continue;  // degenerate subset
    QVec nu = null[0];
    Rat off(0);
    for (int k = 0; k < d; ++k) off += nu[k] * P.span_points[comb[0]][k];
    int pos = 0, neg = 0;
    std::vector<int> tight;
    for (int j = 0; j < V; ++j) {
      Rat v(0);
      for (int k = 0; k < d; ++k) v += nu[k] * P.span_points[j][k];
      if (v > off)
        ++pos;
      else if (v < off)
        ++neg;
      else
        tight.push_back(j);
    }
    if (pos > 0 && neg > 0) continue;  // not supporting
    if (pos == 0 && neg == 0) continue;
    if (pos > 0) {  // flip so that interior side is <=
      for (auto& x : nu) x = -x;
      off = -off;
    }
    if (seen.count(tight)) continue;
    seen.insert(tight);
    LatticePolytope::Facet f;
    f.normal_span = nu;
    f.offset = off;
    f.tight = tight;
    P.facets.push_back(std::move(f));
  } while (advance());
}

void build_face_lattice(LatticePolytope& P) {
  std::set<std::vector<int>> sets;
  std::vector<int> all(P.points.size());
  for (size_t i = 0; i < P.points.size(); ++i) all[i] = (int)i;
  sets.insert(all);
  for (const auto& f : P.facets) sets.insert(f.tight);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(sets.begin(), sets.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        std::vector<int> inter;
        std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(), cur[b].end(),
                              std::back_inserter(inter));
        if (inter.empty()) continue;
        if (sets.insert(inter).second) grew = true;
      }
  }
  for (const auto& s : sets) {
    LatticePolytope::Face face;
    face.verts = s;
    // affine dimension of the span coordinates
    QMat diffs;
    for (size_t i = 1; i < s.size(); ++i) {
      QVec row(P.dim);
      for (int k = 0; k < P.dim; ++k)
        row[k] = P.span_points[s[i]][k] - P.span_points[s[0]][k];
      diffs.push_back(row);
    }
    face.dim = diffs.empty() ? 0 : mat_rank(std::move(diffs));
    P.faces.push_back(std::move(face));
  }
  std::sort(P.faces.begin(), P.faces.end(), [](const auto& a, const auto& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.verts < b.verts;
  });
}

}  // namespace

LatticePolytope moment_polytope(const WeylGroup& w, const std::vector<int>& elems,
                                const QVec& lambda) {
  const RootSystem& rs = w.root_system();
  require_regular_dominant(rs, lambda);
  LatticePolytope P;
  P.nvars = rs.rank();
  std::set<QVec> distinct;
  for (int e : elems) {
    QVec img = rs.act_ambient(w.element(e), lambda);
    QVec diff(img.size());
    for (size_t k = 0; k < img.size(); ++k) diff[k] = img[k] - lambda[k];
    P.vertex_elems.push_back(e);
    P.points.push_back(diff);  // ambient for now; converted to root coords below
  }
  // convert ambient differences to root coordinates via the span projection
  {
    QMat proj;  // recompute the form-orthogonal projector
    const QMat& S = rs.datum().simple_roots;
    QMat SB = mat_mul(S, rs.datum().bilinear);
    QMat gram = mat_mul(SB, mat_transpose(S));
    proj = mat_mul(*mat_inverse(gram), SB);
    for (auto& p : P.points) p = mat_vec(proj, p);
  }
  for (const auto& p : P.points)
    if (!distinct.insert(p).second)
      throw coxcat_error("weight is not regular for this vertex set (vertex collision)");

  // affine dimension and span basis
  QMat diffs;
  for (size_t i = 1; i < P.points.size(); ++i) {
    QVec row(P.nvars);
    for (int k = 0; k < P.nvars; ++k) row[k] = P.points[i][k] - P.points[0][k];
    diffs.push_back(row);
  }
  int d = diffs.empty() ? 0 : mat_rank(diffs);
  P.dim = d;
  if (d == P.nvars) {
    P.span_points = P.points;  // identity chart keeps volumes lattice-normalized
    for (size_t i = 0; i < P.points.size(); ++i) {
      QVec sp(P.nvars);
      for (int k = 0; k < P.nvars; ++k) sp[k] = P.points[i][k] - P.points[0][k];
      P.span_points[i] = sp;
    }
  } else {
    // row-reduce to find a basis of the span among the difference vectors
    QMat basis;
    QMat probe;
    for (auto& row : diffs) {
      probe.push_back(row);
      if (mat_rank(probe) > (int)basis.size()) basis.push_back(row);
      if ((int)basis.size() == d) break;
    }
    // map x -> (B B^T)^{-1} B x
    QMat BBt = mat_mul(basis, mat_transpose(basis));
    QMat M = mat_mul(*mat_inverse(BBt), basis);
    P.span_points.clear();
    for (const auto& p : P.points) P.span_points.push_back(to_span_coords(M, p, P.points[0]));
  }

  enumerate_facets(P);
  build_face_lattice(P);

  // pull facet normals back to root coordinates
  for (auto& f : P.facets) {
    if (d == P.nvars) {
      f.normal_root = f.normal_span;
    } else {
      // normal_span . M (x - p0) <= offset; fold M into the covector
      QMat basis;
      QMat probe;
      for (auto& row : diffs) {
        probe.push_back(row);
        if (mat_rank(probe) > (int)basis.size()) basis.push_back(row);
        if ((int)basis.size() == d) break;
      }
      QMat BBt = mat_mul(basis, mat_transpose(basis));
      QMat M = mat_mul(*mat_inverse(BBt), basis);
      QVec nu(P.nvars, Rat(0));
      for (int k = 0; k < P.nvars; ++k)
        for (int j = 0; j < d; ++j) nu[k] += f.normal_span[j] * M[j][k];
      f.normal_root = nu;
    }
  }
  return P;
}

namespace {

// Triangulation of conv(pts[verts]) (affine dim d, coordinates of dimension
// d) into d-simplices, all containing verts' first element as apex.  Indices
// refer to the original vertex numbering carried in `verts`.
std::vector<std::vector<int>> triangulate_rec(const std::vector<QVec>& pts,
                                              const std::vector<int>& verts, int d) {
  if ((int)verts.size() == d + 1) return {verts};
  if (d == 1) {
    if (verts.size() != 2) throw coxcat_error("1-face with extra vertices");
    return {verts};
  }
  LatticePolytope sub;
  sub.nvars = d;
  sub.dim = d;
  for (int v : verts) {
    sub.vertex_elems.push_back(v);
    sub.points.push_back(pts[v]);
  }
  for (const auto& p : sub.points) {
    QVec sp(d);
    for (int k = 0; k < d; ++k) sp[k] = p[k] - sub.points[0][k];
    sub.span_points.push_back(sp);
  }
  enumerate_facets(sub);
  int apex = 0;
  std::vector<std::vector<int>> out;
  for (const auto& f : sub.facets) {
    bool has_apex = false;
    for (int t : f.tight)
      if (t == apex) has_apex = true;
    if (has_apex) continue;
    QMat basis;
    QMat probe;
    QVec origin = sub.span_points[f.tight[0]];
    for (size_t i = 1; i < f.tight.size(); ++i) {
      QVec row(d);
      for (int k = 0; k < d; ++k) row[k] = sub.span_points[f.tight[i]][k] - origin[k];
      probe.push_back(row);
      if (mat_rank(probe) > (int)basis.size()) basis.push_back(row);
      if ((int)basis.size() == d - 1) break;
    }
    QMat BBt = mat_mul(basis, mat_transpose(basis));
    QMat M = mat_mul(*mat_inverse(BBt), basis);
    std::vector<QVec> fpts(pts.size());
    for (int t : f.tight) fpts[sub.vertex_elems[t]] = to_span_coords(M, sub.span_points[t], origin);
    std::vector<int> fverts;
    for (int t : f.tight) fverts.push_back(sub.vertex_elems[t]);
    for (auto& tri : triangulate_rec(fpts, fverts, d - 1)) {
      tri.push_back(sub.vertex_elems[apex]);
      out.push_back(tri);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> apex_triangulation(const LatticePolytope& P, int apex) {
  if (P.dim == 0) return {{apex}};
  // reorder so the apex comes first, then triangulate
  std::vector<int> verts{apex};
  for (size_t i = 0; i < P.points.size(); ++i)
    if ((int)i != apex) verts.push_back((int)i);
  return triangulate_rec(P.span_points, verts, P.dim);
}

Rat polytope_volume(const LatticePolytope& P) {
  if (P.dim != P.nvars)
    throw coxcat_error("normalized volume requires a full-dimensional polytope");
  auto simplices = apex_triangulation(P, 0);
  Rat vol(0);
  Rat fact(1);
  for (int k = 2; k <= P.dim; ++k) fact *= k;
  for (const auto& s : simplices) {
    QMat m;
    for (size_t i = 1; i < s.size(); ++i) {
      QVec row(P.dim);
      for (int k = 0; k < P.dim; ++k)
        row[k] = P.span_points[s[i]][k] - P.span_points[s[0]][k];
      m.push_back(row);
    }
    Rat det = mat_det(std::move(m));
    vol += (det < 0 ? -det : det) / fact;
  }
  return vol;
}

std::vector<std::pair<int, int>> faces_as_subintervals(const WeylGroup& w,
                                                       const LatticePolytope& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& face : p.faces) {
    std::vector<int> elems;
    for (int v : face.verts) elems.push_back(p.vertex_elems[v]);
    int bottom = -1, top = -1;
    for (int x : elems) {
      bool is_min = true, is_max = true;
      for (int y : elems) {
        if (!w.bruhat_leq(x, y)) is_min = false;
        if (!w.bruhat_leq(y, x)) is_max = false;
      }
      if (is_min) bottom = x;
      if (is_max) top = x;
    }
    if (bottom < 0 || top < 0)
      throw coxcat_error("face vertex set has no Bruhat minimum/maximum");
    int count = 0;
    for (int x = 0; x < w.size(); ++x)
      if (w.bruhat_leq(bottom, x) && w.bruhat_leq(x, top)) ++count;
    if (count != (int)elems.size())
      throw coxcat_error("face vertex set is not a full Bruhat interval");
    for (int x : elems)
      if (!w.bruhat_leq(bottom, x) || !w.bruhat_leq(x, top))
        throw coxcat_error("face vertex set is not a Bruhat interval");
    out.push_back({bottom, top});
  }
  return out;
}

namespace {

// Gram matrix of the simple roots, for converting covectors to vectors.
QMat simple_gram(const RootSystem& rs) {
  int n = rs.rank();
  QMat g = qmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QVec ai(rs.datum().simple_roots[i].begin(), rs.datum().simple_roots[i].end());
      QVec aj(rs.datum().simple_roots[j].begin(), rs.datum().simple_roots[j].end());
      g[i][j] = rs.form(ai, aj);
    }
  return g;
}

bool parallel_to_root(const RootSystem& rs, const QVec& v) {
  if (is_zero(v)) return false;
  for (int r = 0; r < rs.num_positive(); ++r) {
    const IVec& beta = rs.positive_root(r);
    // v = q beta?
    Rat q(0);
    bool ok = true;
    for (int k = 0; k < rs.rank() && ok; ++k) {
      if (beta[k] == 0) {
        if (v[k] != 0) ok = false;
      } else if (q == 0) {
        q = v[k] / Rat(beta[k]);
      }
    }
    if (!ok || q == 0) continue;
    ok = true;
    for (int k = 0; k < rs.rank(); ++k)
      if (v[k] != q * Rat(beta[k])) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool polypositroid_test(const WeylGroup& w, const LatticePolytope& p, int c_elem) {
  const RootSystem& rs = w.root_system();
  int n = rs.rank();
  QMat gram_inv = *mat_inverse(simple_gram(rs));
  const Element& c = w.element(c_elem);

  // (id - c) as a matrix on root coordinates
  QMat one_minus_c = qmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      one_minus_c[i][j] = Rat(i == j ? 1 : 0) - Rat((long)c.at(i, j));

  if (p.dim == p.nvars) {
    for (const auto& f : p.facets) {
      QVec nvec = mat_vec(gram_inv, f.normal_root);
      if (!parallel_to_root(rs, mat_vec(one_minus_c, nvec))) return false;
    }
    return true;
  }

  // lower-dimensional: each facet normal is free modulo the annihilator of
  // the span; ask for a compliant representative n + z with
  // (1-c)(n + z) = q beta for some root beta
  // annihilator (as vectors): form-inverse images of covectors vanishing on the span
  QMat diffs;
  for (size_t i = 1; i < p.points.size(); ++i) {
    QVec row(n);
    for (int k = 0; k < n; ++k) row[k] = p.points[i][k] - p.points[0][k];
    diffs.push_back(row);
  }
  QMat ann_covectors = null_space(std::move(diffs));  // rows nu with nu.(span)=0
  std::vector<QVec> ann_vectors;
  for (auto& nu : ann_covectors) ann_vectors.push_back(mat_vec(gram_inv, nu));

  for (const auto& f : p.facets) {
    QVec nvec = mat_vec(gram_inv, f.normal_root);
    bool found = false;
    for (int r = 0; r < rs.num_positive() && !found; ++r) {
      // solve (1-c)(n + sum_i z_i a_i) = q beta in unknowns z_i, q
      int m = (int)ann_vectors.size();
      QMat sys = qmat(n, m + 1);
      for (int i = 0; i < m; ++i) {
        QVec col = mat_vec(one_minus_c, ann_vectors[i]);
        for (int k = 0; k < n; ++k) sys[k][i] = col[k];
      }
      for (int k = 0; k < n; ++k) sys[k][m] = -Rat(rs.positive_root(r)[k]);
      QVec rhs = mat_vec(one_minus_c, nvec);
      for (auto& x : rhs) x = -x;
      auto sol = solve_linear(sys, rhs);
      if (sol) {
        if ((*sol)[m] != 0) {
          found = true;
        } else {
          for (const auto& nullv : null_space(sys))
            if (nullv[m] != 0) { found = true; break; }
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

int MomentComplex::euler_characteristic() const {
  int chi = 0;
  for (const auto& f : faces) chi += (f.dim % 2 == 0) ? 1 : -1;
  return chi;
}

MomentComplex build_moment_complex(const Cambrian& cam, const QVec& lambda) {
  const WeylGroup& w = cam.group();
  CoxeterElement cox;
  cox.word = cam.coxeter_word();
  cox.element = cam.coxeter();
  NcLattice nc = build_nc(w, cox);

  MomentComplex mc;
  std::map<std::vector<int>, int> top_index;  // element set -> top face id
  std::map<std::vector<int>, MomentComplex::FaceRec> glued;

  for (int welem = 0; welem < w.size(); ++welem) {
    if (!is_length_additive(w, welem, cox.element)) continue;
    TranslatedInterval ti = translated_interval(w, welem, cox);
    auto key = ti.elements;
    auto it = top_index.find(key);
    if (it != top_index.end()) {
      mc.top_members[it->second].push_back(welem);
      continue;
    }
    LatticePolytope P = moment_polytope(w, ti.elements, lambda);
    int id = (int)mc.top_faces.size();
    top_index[key] = id;
    mc.top_members.push_back({welem});
    for (const auto& face : P.faces) {
      std::vector<int> verts;
      for (int v : face.verts) verts.push_back(P.vertex_elems[v]);
      std::sort(verts.begin(), verts.end());
      auto g = glued.find(verts);
      if (g == glued.end()) {
        glued[verts] = {verts, face.dim, {id}};
      } else {
        if (g->second.dim != face.dim)
          throw coxcat_error("glued faces with equal vertex sets have different dimensions");
        if (std::find(g->second.owners.begin(), g->second.owners.end(), id) ==
            g->second.owners.end())
          g->second.owners.push_back(id);
      }
    }
    mc.top_faces.push_back(std::move(P));
  }

  for (auto& [verts, rec] : glued) mc.faces.push_back(rec);

  // 0-skeleton = NC(W,c)
  std::set<int> vertex_elems;
  for (const auto& f : mc.faces)
    if (f.dim == 0) vertex_elems.insert(f.verts[0]);
  if (vertex_elems != std::set<int>(nc.elements.begin(), nc.elements.end()))
    throw coxcat_error("moment complex vertices do not match NC(W,c)");

  // 1-skeleton = Kreweras Hasse diagram
  std::set<std::pair<int, int>> complex_edges, kre;
  for (const auto& f : mc.faces)
    if (f.dim == 1) {
      if (f.verts.size() != 2) throw coxcat_error("1-face with more than two vertices");
      complex_edges.insert({f.verts[0], f.verts[1]});
    }
  for (const auto& e : nc.kreweras.edges)
    kre.insert({std::min(e.lower, e.upper), std::max(e.lower, e.upper)});
  if (complex_edges != kre)
    throw coxcat_error("moment complex 1-skeleton does not match the Kreweras Hasse diagram");

  return mc;
}

TilingReport hhmp_tiling_check(const WeylGroup& w, const CoxeterElement& cox, const QVec& lambda,
                               int samples_per_piece, uint64_t seed) {
  TilingReport rep;
  std::vector<LatticePolytope> pieces;
  for (int welem = 0; welem < w.size(); ++welem) {
    if (!is_length_additive(w, welem, cox.element)) continue;
    BruhatInterval iv = bruhat_interval(w, welem, w.mul(welem, cox.element));
    pieces.push_back(moment_polytope(w, iv.poset.elements, lambda));
  }
  rep.pieces = (int)pieces.size();
  rep.total_piece_volume = 0;
  for (const auto& p : pieces) rep.total_piece_volume += polytope_volume(p);

  std::vector<int> all(w.size());
  for (int i = 0; i < w.size(); ++i) all[i] = i;
  LatticePolytope perm = moment_polytope(w, all, lambda);
  rep.permutahedron_volume = polytope_volume(perm);
  rep.volumes_match = (rep.total_piece_volume == rep.permutahedron_volume);
  if (!rep.volumes_match) rep.failures.push_back("piece volumes do not sum to Perm_W volume");

  // sampled interior points of each piece must be outside every other piece
  std::mt19937_64 gen(seed);
  rep.interiors_disjoint = true;
  for (size_t i = 0; i < pieces.size(); ++i) {
    std::vector<QVec> samples{pieces[i].centroid()};
    for (int s = 1; s < samples_per_piece; ++s) {
      // random convex combination with small deterministic integer weights
      QVec pt(pieces[i].nvars, Rat(0));
      Rat total(0);
      for (const auto& v : pieces[i].points) {
        long wgt = 1 + (long)(gen() % 7);
        total += wgt;
        for (int k = 0; k < pieces[i].nvars; ++k) pt[k] += Rat(wgt) * v[k];
      }
      for (auto& x : pt) x /= total;
      samples.push_back(pt);
    }
    for (const auto& s : samples)
      for (size_t j = 0; j < pieces.size(); ++j) {
        if (j == i) continue;
        if (pieces[j].contains(s, /*strictly=*/true)) {
          rep.interiors_disjoint = false;
          rep.failures.push_back("interior sample of one piece lies inside another");
        }
      }
  }
  return rep;
}

}  // namespace coxcat
