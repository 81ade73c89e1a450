#include "coxcat/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace coxcat {

namespace {
constexpr const char* kSchema = "coxcat/1";

std::string qstr(const Rat& q) { return q.get_str(); }

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(qstr(x));
  return a;
}

std::string ol(const VerifyContext& c, int e) { return c.rs.one_line_string(c.w.element(e)); }
}  // namespace

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = type_name(rs.type());
  j["rank"] = rs.rank();
  Json cartan = Json::array();
  for (const auto& row : rs.datum().cartan) cartan.push_back(row);
  j["cartan_matrix"] = cartan;
  Json simples = Json::array();
  for (const auto& row : rs.datum().simple_roots) simples.push_back(qvec_json(row));
  j["simple_roots"] = simples;
  Json bil = Json::array();
  for (const auto& row : rs.datum().bilinear) bil.push_back(qvec_json(row));
  j["bilinear_form"] = bil;
  Json roots = Json::array();
  for (int r = 0; r < rs.num_positive(); ++r) roots.push_back(rs.positive_root(r));
  j["positive_roots"] = roots;
  j["num_reflections"] = rs.num_positive();
  if (rs.classical()) j["longest_element"] = rs.one_line_string(rs.longest_element());
  return j;
}

Json weyl_json(const WeylGroup& w) {
  Json j;
  j["schema"] = kSchema;
  j["order"] = w.size();
  Json elems = Json::array();
  for (int i = 0; i < w.size(); ++i) {
    Json e;
    e["one_line"] = w.root_system().one_line_string(w.element(i));
    e["length"] = w.length(i);
    e["absolute_length"] = w.absolute_length(i);
    e["word"] = w.canonical_word(i);
    elems.push_back(e);
  }
  j["elements"] = elems;
  return j;
}

Json coxeter_elements_json(const WeylGroup& w) {
  Json j;
  j["schema"] = kSchema;
  Json arr = Json::array();
  for (const auto& c : enumerate_coxeter_elements(w)) {
    Json e;
    e["word"] = c.word;
    e["one_line"] = w.root_system().one_line_string(w.element(c.element));
    arr.push_back(e);
  }
  j["coxeter_elements"] = arr;
  return j;
}

Json nc_json(const VerifyContext& c) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = type_name(c.rs.type());
  j["rank"] = c.rs.rank();
  j["coxeter"] = c.cox.word;
  j["catalan"] = c.nc.catalan();
  j["positive_catalan"] = c.nc.positive_catalan();
  Json elems = Json::array();
  for (int u : c.nc.elements) {
    Json e;
    e["one_line"] = ol(c, u);
    e["absolute_length"] = c.w.absolute_length(u);
    e["full_support"] = full_support(c.w, u);
    Json cp = Json::array();
    for (int r : c.nc.clust_plus(u)) cp.push_back(c.rs.positive_root(r));
    e["clust_plus"] = cp;
    Json in = Json::array();
    for (int r : c.nc.inv_nc(u))
      in.push_back(c.rs.one_line_string(c.w.element(c.w.reflection_index(r))));
    e["inv_nc"] = in;
    elems.push_back(e);
  }
  j["elements"] = elems;
  Json edges = Json::array();
  for (const auto& e : c.nc.kreweras.edges) {
    Json ed;
    ed["lower"] = ol(c, e.lower);
    ed["upper"] = ol(c, e.upper);
    ed["label"] = c.rs.one_line_string(c.w.element(c.w.reflection_index(e.label_root)));
    edges.push_back(ed);
  }
  j["hasse"] = edges;
  return j;
}

Json interval_json(const WeylGroup& w, const LabeledPoset& poset) {
  const RootSystem& rs = w.root_system();
  Json j;
  j["schema"] = kSchema;
  j["bottom"] = rs.one_line_string(w.element(poset.bottom));
  j["top"] = rs.one_line_string(w.element(poset.top));
  Json elems = Json::array();
  for (int x : poset.elements) elems.push_back(rs.one_line_string(w.element(x)));
  j["elements"] = elems;
  Json edges = Json::array();
  for (const auto& e : poset.edges) {
    Json ed;
    ed["lower"] = rs.one_line_string(w.element(e.lower));
    ed["upper"] = rs.one_line_string(w.element(e.upper));
    ed["label"] = rs.one_line_string(w.element(w.reflection_index(e.label_root)));
    edges.push_back(ed);
  }
  j["hasse"] = edges;
  return j;
}

std::string hasse_dot(const WeylGroup& w, const LabeledPoset& poset) {
  const RootSystem& rs = w.root_system();
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int x : poset.elements)
    os << "  \"" << rs.one_line_string(w.element(x)) << "\";\n";
  for (const auto& e : poset.edges)
    os << "  \"" << rs.one_line_string(w.element(e.lower)) << "\" -> \""
       << rs.one_line_string(w.element(e.upper)) << "\" [label=\""
       << rs.one_line_string(w.element(w.reflection_index(e.label_root))) << "\"];\n";
  os << "}\n";
  return os.str();
}

Json sortable_json(const VerifyContext& c, int element) {
  Json j;
  j["schema"] = kSchema;
  j["element"] = ol(c, element);
  SortingWord sw = c.cam.sorting_word(element);
  j["sortable"] = sw.sortable;
  j["sorting_word"] = sw.letters;
  j["positions"] = sw.positions;
  Json syl = Json::array();
  for (const auto& s : sw.syllables) syl.push_back(s);
  j["syllables"] = syl;
  j["pi_down"] = ol(c, c.cam.pi_down(element));
  j["pi_up"] = ol(c, c.cam.pi_up(element));
  if (sw.sortable) {
    SkipData sd = c.cam.skips(element);
    Json skips = Json::array();
    for (size_t i = 0; i < sd.reflections.size(); ++i) {
      Json s;
      s["position"] = sd.positions[i];
      s["reflection"] = ol(c, sd.reflections[i]);
      s["forced"] = (bool)sd.forced[i];
      skips.push_back(s);
    }
    j["skips"] = skips;
    j["nc_c"] = ol(c, c.cam.nc_c_of_sortable(element));
  } else {
    j["nc_c"] = ol(c, c.cam.nc_c(element));
  }
  return j;
}

Json complex_json(const VerifyContext& c, const MomentComplex& mc) {
  Json j;
  j["schema"] = kSchema;
  j["coxeter"] = c.cox.word;
  Json verts;
  for (int u : c.nc.elements) {
    QVec img = c.rs.act_ambient(c.w.element(u), c.lambda);
    verts[ol(c, u)] = qvec_json(img);
  }
  j["vertices"] = verts;
  Json faces = Json::array();
  for (const auto& f : mc.faces) {
    Json fj;
    Json fv = Json::array();
    for (int v : f.verts) fv.push_back(ol(c, v));
    fj["verts"] = fv;
    fj["dim"] = f.dim;
    fj["owners"] = f.owners;
    faces.push_back(fj);
  }
  j["faces"] = faces;
  j["top_faces"] = (int)mc.top_faces.size();
  j["euler_characteristic"] = mc.euler_characteristic();
  return j;
}

std::string complex_dot(const VerifyContext& c, const MomentComplex& mc) {
  std::ostringstream os;
  os << "graph complex {\n";
  for (const auto& f : mc.faces) {
    if (f.dim == 0) os << "  \"" << ol(c, f.verts[0]) << "\";\n";
    if (f.dim == 1)
      os << "  \"" << ol(c, f.verts[0]) << "\" -- \"" << ol(c, f.verts[1]) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

// cyclic order of the vertices of a 2-face, exact over Q
std::vector<int> polygon_cycle(const std::vector<QVec>& pts) {
  int m = (int)pts.size();
  // centroid
  QVec ctr(pts[0].size(), Rat(0));
  for (const auto& p : pts) ctr = ctr + p;
  for (auto& x : ctr) x /= m;
  // plane basis from the first two independent edge directions
  QMat basis;
  for (int i = 1; i < m && (int)basis.size() < 2; ++i) {
    QVec d = pts[i] - pts[0];
    QMat probe = basis;
    probe.push_back(d);
    if (mat_rank(probe) > (int)basis.size()) basis.push_back(d);
  }
  QMat BBt = mat_mul(basis, mat_transpose(basis));
  QMat M = mat_mul(*mat_inverse(BBt), basis);
  std::vector<std::pair<Rat, Rat>> plane(m);
  for (int i = 0; i < m; ++i) {
    QVec d = pts[i] - ctr;
    QVec uv = mat_vec(M, d);
    plane[i] = {uv[0], uv[1]};
  }
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  auto half = [&](int i) {
    auto [x, y] = plane[i];
    return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    // cross product sign
    Rat cross = plane[a].first * plane[b].second - plane[a].second * plane[b].first;
    return cross > 0;
  });
  return idx;
}

}  // namespace

std::string complex_off(const VerifyContext& c, const MomentComplex& mc) {
  if (c.rs.rank() > 3)
    throw coxcat_error("OFF export needs rank <= 3 (3-dimensional coordinates)");
  std::vector<int> vert_ids(c.w.size(), -1);
  std::vector<QVec> coords;
  for (int u : c.nc.elements) {
    vert_ids[u] = (int)coords.size();
    QVec img = c.rs.act_ambient(c.w.element(u), c.lambda);
    QVec base = c.lambda;
    for (size_t k = 0; k < img.size(); ++k) img[k] -= base[k];
    // root coordinates have dimension = rank <= 3; padded to 3 below
    coords.push_back(c.rs.span_coordinates(img));
  }
  std::vector<const MomentComplex::FaceRec*> polys;
  for (const auto& f : mc.faces)
    if (f.dim == 2) polys.push_back(&f);
  std::ostringstream os;
  os << "OFF\n" << coords.size() << " " << polys.size() << " 0\n";
  for (const auto& p : coords) {
    for (int k = 0; k < 3; ++k)
      os << (k < (int)p.size() ? p[k].get_d() : 0.0) << (k < 2 ? " " : "\n");
  }
  for (const auto* f : polys) {
    std::vector<QVec> pts;
    for (int v : f->verts) pts.push_back(coords[vert_ids[v]]);
    auto cycle = polygon_cycle(pts);
    os << f->verts.size();
    for (int i : cycle) os << " " << vert_ids[f->verts[i]];
    os << "\n";
  }
  return os.str();
}

Json poly_json(const IntPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, coeff] : p.terms()) {
    Json t = Json::array();
    t.push_back(coeff.get_str());
    t.push_back(e);
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  j["string"] = p.to_string();
  return j;
}

Json betti_json(const VerifyContext& c) {
  NcCohomology coh(c.cam, c.lambda);
  Json j;
  j["schema"] = kSchema;
  j["betti"] = coh.betti();
  j["flag_betti"] = flag_betti(c.w);
  return j;
}

Json schubert_json(const VerifyContext& c) {
  auto S = schubert_classes(c.w);
  Json j;
  j["schema"] = kSchema;
  Json classes;
  for (int w = 0; w < c.w.size(); ++w) {
    Json vals;
    for (int v = 0; v < c.w.size(); ++v)
      if (!S[w].values[v].is_zero()) vals[ol(c, v)] = poly_json(S[w].values[v]);
    classes[ol(c, w)] = vals;
  }
  j["schubert_classes"] = classes;
  return j;
}

Json duality_json(const VerifyContext& c) {
  NcCohomology coh(c.cam, c.lambda);
  Json j;
  j["schema"] = kSchema;
  j["coxeter"] = c.cox.word;
  Json classes;
  const auto& D = coh.duality_basis();
  for (int k = 0; k < (int)D.size(); ++k) {
    Json vals;
    for (int v = 0; v < (int)D[k].values.size(); ++v)
      if (!D[k].values[v].is_zero())
        vals[ol(c, coh.graph().vertices[v])] = poly_json(D[k].values[v]);
    classes[ol(c, coh.graph().vertices[k])] = vals;
  }
  j["coxeter_schubert_classes"] = classes;
  return j;
}

Json suite_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures;
  j["ok"] = rep.ok();
  return j;
}

Json suites_json(const std::vector<SuiteReport>& reps) {
  Json j;
  j["schema"] = kSchema;
  Json arr = Json::array();
  long long checked = 0;
  bool ok = true;
  for (const auto& r : reps) {
    arr.push_back(suite_json(r));
    checked += r.checked;
    ok = ok && r.ok();
  }
  j["suites"] = arr;
  j["checked"] = checked;
  j["ok"] = ok;
  return j;
}

Json plucker_report_json(const PluckerReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["cells"] = rep.cells;
  j["samples"] = rep.samples;
  j["deterministic_failures"] = rep.deterministic_failures;
  j["top_nonzero"] = rep.top_nonzero;
  j["spurious_vanishing"] = rep.spurious_vanishing;
  j["fixed_point_check"] = rep.fixed_point_check;
  j["failures"] = rep.failures;
  j["ok"] = rep.ok();
  return j;
}

std::string pattern_show(const VerifyContext& c, int u) {
  ChartPattern pat = nc_cell_chart(c.w, c.nc, u);
  std::ostringstream os;
  os << "cell " << ol(c, u) << "  (stars = " << pat.star_count() << ")\n";
  for (const auto& line : render_pattern(pat)) os << "  " << line << "\n";
  os << "legend: . zero, 1 one, * free, x forced by isotropy\n";
  return os.str();
}

}  // namespace coxcat
