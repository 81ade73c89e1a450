#include "coxcat/verify.hpp"

#include "coxcat/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxcat {

VerifyContext::VerifyContext(GroupType t, int rank, const std::vector<int>& cword,
                             const QVec* lambda_override)
    : rs(CartanDatum::classical(t, rank)),
      w(rs),
      cox(coxeter_from_word(w, cword)),
      cam(w, cword),
      nc(build_nc(w, cox)),
      lambda(lambda_override ? *lambda_override : default_lambda(rs)) {
  require_regular_dominant(rs, lambda);
}

namespace {
std::string ol(const VerifyContext& c, int e) { return c.rs.one_line_string(c.w.element(e)); }
}  // namespace

SuiteReport verify_hasseunion(const VerifyContext& c) {
  SuiteReport rep{"hasseunion"};
  std::set<int> covered;
  std::set<std::pair<int, int>> covered_edges, kre;
  for (const auto& e : c.nc.kreweras.edges) kre.insert({e.lower, e.upper});
  for (int w = 0; w < c.w.size(); ++w) {
    bool additive = is_length_additive(c.w, w, c.cox.element);
    int wop = c.w.mul(c.w.inverse(w), c.w.w0());
    bool weak = weak_leq(c.w, c.cox.element, wop);
    ++rep.checked;
    if (additive != weak)
      rep.failures.push_back("length-additivity mismatch with c <=_R w_op at w = " + ol(c, w));
    if (!additive) continue;
    try {
      TranslatedInterval ti = translated_interval(c.w, w, c.cox);
      for (int x : ti.elements) {
        ++rep.checked;
        if (!c.nc.contains(x))
          rep.failures.push_back("I(w,wc) escapes NC at w = " + ol(c, w) + ", x = " + ol(c, x));
        covered.insert(x);
        int orig = c.w.mul(w, x);
        if (c.w.absolute_length(x) != c.w.length(orig) - c.w.length(w))
          rep.failures.push_back("rank mismatch in I(w,wc) at w = " + ol(c, w));
      }
      for (const auto& e : ti.poset.edges) {
        ++rep.checked;
        if (!kre.count({e.lower, e.upper}))
          rep.failures.push_back("interval edge is not a Kreweras edge at w = " + ol(c, w));
        covered_edges.insert({e.lower, e.upper});
      }
    } catch (const std::exception& ex) {
      rep.failures.push_back(std::string("interval construction failed: ") + ex.what());
    }
  }
  if (covered != std::set<int>(c.nc.elements.begin(), c.nc.elements.end()))
    rep.failures.push_back("translated intervals do not cover NC(W,c)");
  if (covered_edges != kre)
    rep.failures.push_back("translated intervals do not cover the Kreweras Hasse diagram");
  rep.checked += 2;
  return rep;
}

SuiteReport verify_equivwwc(const VerifyContext& c) {
  SuiteReport rep{"equivwwc"};
  try {
    auto classes = classify_translates(c.cam);
    rep.checked += c.w.size();
    if ((int)classes.size() != c.nc.positive_catalan())
      rep.failures.push_back("distinct translate count != Cat+");
    std::set<int> maxima;
    for (const auto& cls : classes) {
      maxima.insert(cls.bruhat_max);
      std::set<int> pds;
      for (int m : cls.members)
        pds.insert(c.cam.pi_down(c.w.mul(c.w.inverse(m), c.w.w0())));
      ++rep.checked;
      if (pds.size() != 1)
        rep.failures.push_back("translate class spans several Cambrian classes at u = " +
                               ol(c, cls.bruhat_max));
      // psi labels coincide with the decreasing chain labels for each member
      for (int m : cls.members) {
        auto psi = c.cam.psi_labels(m);
        std::multiset<int> lab(psi.begin(), psi.end());
        std::multiset<int> chain_lab;
        for (size_t i = 0; i + 1 < cls.decreasing_chain.size(); ++i) {
          int x = cls.decreasing_chain[i], y = cls.decreasing_chain[i + 1];
          Element sigma = c.rs.mul(c.rs.inverse(c.w.element(x)), c.w.element(y));
          chain_lab.insert(c.w.reflection_index(c.rs.root_of_reflection(sigma)));
        }
        ++rep.checked;
        if (lab != chain_lab) {
          rep.failures.push_back("psi labels differ from the decreasing chain at w = " +
                                 ol(c, m));
          break;
        }
      }
    }
    if (maxima != std::set<int>(c.nc.positive_subset.begin(), c.nc.positive_subset.end()))
      rep.failures.push_back("Bruhat maxima do not biject with NC+");
    ++rep.checked;
  } catch (const std::exception& ex) {
    rep.failures.push_back(std::string("classification failed: ") + ex.what());
  }
  return rep;
}

SuiteReport verify_bruhatmax(const VerifyContext& c) {
  SuiteReport rep{"bruhatmax"};
  for (int w = 0; w < c.w.size(); ++w) {
    if (!is_length_additive(c.w, w, c.cox.element)) continue;
    TranslatedInterval ti = translated_interval(c.w, w, c.cox);
    int wop = c.w.mul(c.w.inverse(w), c.w.w0());
    int expect = c.cam.nc_c_of_sortable(c.cam.pi_down(wop));
    ++rep.checked;
    if (ti.bruhat_max != expect)
      rep.failures.push_back("Bruhat max != nc_c(pi_down(w_op)) at w = " + ol(c, w));
    // adjacent set equals {tau u : tau in Inv_NC(u)}
    std::set<int> adj;
    for (const auto& e : ti.poset.edges) {
      if (e.lower == ti.bruhat_max) adj.insert(e.upper);
      if (e.upper == ti.bruhat_max) adj.insert(e.lower);
    }
    std::set<int> expected_adj;
    for (int r : c.nc.inv_nc(ti.bruhat_max))
      expected_adj.insert(c.w.mul(c.w.reflection_index(r), ti.bruhat_max));
    ++rep.checked;
    if (adj != expected_adj)
      rep.failures.push_back("adjacent-to-max set mismatch at w = " + ol(c, w));
  }
  return rep;
}

SuiteReport verify_clustercone(const VerifyContext& c) {
  SuiteReport rep{"clustercone"};
  std::set<std::vector<int>> images;
  for (int u : c.nc.elements) {
    auto cp = c.nc.clust_plus(u);
    ++rep.checked;
    if (!strong_closure_check(c.rs, cp))
      rep.failures.push_back("Clust+ not strongly closed at u = " + ol(c, u));
    images.insert(cp);
    ++rep.checked;
    if (cp.size() != c.nc.inv_nc(u).size())
      rep.failures.push_back("|Clust+| != |Inv_NC| at u = " + ol(c, u));
    try {
      auto basis = cluster_complete_to_basis(c.rs, cp);
      ++rep.checked;
      if ((int)basis.size() != c.rs.rank())
        rep.failures.push_back("completion has wrong size at u = " + ol(c, u));
    } catch (const std::exception& ex) {
      rep.failures.push_back("cluster completion failed at u = " + ol(c, u) + ": " + ex.what());
    }
  }
  if ((int)images.size() != c.nc.catalan())
    rep.failures.push_back("Clust+ is not injective on NC");
  ++rep.checked;
  return rep;
}

SuiteReport verify_polypositroid(const VerifyContext& c) {
  SuiteReport rep{"polypositroid"};
  for (int w = 0; w < c.w.size(); ++w) {
    if (!is_length_additive(c.w, w, c.cox.element)) continue;
    TranslatedInterval ti = translated_interval(c.w, w, c.cox);
    LatticePolytope p = moment_polytope(c.w, ti.elements, c.lambda);
    ++rep.checked;
    if (!polypositroid_test(c.w, p, c.cox.element))
      rep.failures.push_back("translated piece fails the polypositroid test at w = " + ol(c, w));
    // faces of the untranslated interval polytope are subintervals
    try {
      BruhatInterval iv = bruhat_interval(c.w, w, c.w.mul(w, c.cox.element));
      faces_as_subintervals(c.w, moment_polytope(c.w, iv.poset.elements, c.lambda));
      ++rep.checked;
    } catch (const std::exception& ex) {
      rep.failures.push_back("face-subinterval failure at w = " + ol(c, w) + ": " + ex.what());
    }
  }
  return rep;
}

SuiteReport verify_complex(const VerifyContext& c) {
  SuiteReport rep{"complex"};
  try {
    MomentComplex mc = build_moment_complex(c.cam, c.lambda);
    rep.checked += (long long)mc.faces.size();
    if ((int)mc.top_faces.size() != c.nc.positive_catalan())
      rep.failures.push_back("top face count != Cat+");
    if (mc.euler_characteristic() != 1)
      rep.failures.push_back("Euler characteristic != 1");
    rep.checked += 2;
    for (const auto& f : mc.faces) {
      LatticePolytope fp = moment_polytope(c.w, f.verts, c.lambda);
      ++rep.checked;
      if (!polypositroid_test(c.w, fp, c.cox.element)) {
        std::string verts;
        for (int v : f.verts) verts += ol(c, v) + " ";
        rep.failures.push_back("face fails the polypositroid test: " + verts);
      }
    }
  } catch (const std::exception& ex) {
    rep.failures.push_back(std::string("complex construction failed: ") + ex.what());
  }
  return rep;
}

SuiteReport verify_hhmp(const VerifyContext& c) {
  SuiteReport rep{"hhmp"};
  TilingReport t = hhmp_tiling_check(c.w, c.cox, c.lambda, 8, c.seed);
  rep.checked = t.pieces + 2;
  for (const auto& f : t.failures) rep.failures.push_back(f);
  if (!t.volumes_match)
    rep.failures.push_back("sum of piece volumes " + t.total_piece_volume.get_str() +
                           " != permutahedron volume " + t.permutahedron_volume.get_str());
  return rep;
}

SuiteReport verify_gkm(const VerifyContext& c) {
  SuiteReport rep{"gkm"};
  try {
    NcCohomology coh(c.cam, c.lambda);
    const auto& D = coh.duality_basis();
    int N = (int)D.size();
    int n = c.rs.rank();
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        ++rep.checked;
        RationalFn v = coh.integrate(j, D[k]);
        if (!v.is_polynomial() ||
            !(v.as_polynomial() == IntPoly::constant(n, j == k ? 1 : 0))) {
          rep.failures.push_back("duality integral != delta at (" +
                                 ol(c, coh.graph().vertices[j]) + ", " +
                                 ol(c, coh.graph().vertices[k]) + ")");
        }
      }
    for (int k = 0; k < N; ++k) {
      int u = coh.graph().vertices[k];
      IntPoly lead = IntPoly::constant(n, 1);
      for (int r : c.nc.inv_nc(u))
        lead = lead * IntPoly::linear_form(
                          IVec(c.rs.positive_root(r).begin(), c.rs.positive_root(r).end()));
      ++rep.checked;
      if (!(D[k].values[k] == lead))
        rep.failures.push_back("leading term mismatch at u = " + ol(c, u));
      for (int v = 0; v < N; ++v) {
        ++rep.checked;
        if (!c.w.bruhat_leq(u, coh.graph().vertices[v]) && !D[k].values[v].is_zero())
          rep.failures.push_back("flowup vanishing fails at u = " + ol(c, u));
      }
      ++rep.checked;
      if (!is_gkm_class(c.rs, coh.graph(), D[k]))
        rep.failures.push_back("duality element is not a class at u = " + ol(c, u));
    }
    auto b = coh.betti();
    ++rep.checked;
    int total = 0;
    for (int x : b) total += x;
    if (total != c.nc.catalan() || b.empty() || b[0] != 1)
      rep.failures.push_back("Betti histogram is inconsistent");
  } catch (const std::exception& ex) {
    rep.failures.push_back(std::string("gkm construction failed: ") + ex.what());
  }
  return rep;
}

SuiteReport verify_plucker(const VerifyContext& c) {
  SuiteReport rep{"plucker"};
  PluckerReport p = verify_plucker_vanishing(c.w, c.nc, c.prime, c.trials, c.seed);
  rep.checked = p.samples * (long long)c.w.size();
  if (p.deterministic_failures > 0)
    for (const auto& f : p.failures) rep.failures.push_back(f);
  if (!p.fixed_point_check) rep.failures.push_back("torus-fixed coset Pluecker check failed");
  if (p.samples > 0 && (double)p.top_nonzero < 0.99 * (double)p.samples)
    rep.failures.push_back("Pl_u vanished on more than 1% of samples");
  return rep;
}

std::vector<std::string> suite_names() {
  return {"hasseunion", "equivwwc",  "bruhatmax", "clustercone", "polypositroid",
          "complex",    "hhmp",      "gkm",       "plucker"};
}

SuiteReport (*suite_by_name(const std::string& name))(const VerifyContext&) {
  if (name == "hasseunion") return verify_hasseunion;
  if (name == "equivwwc") return verify_equivwwc;
  if (name == "bruhatmax") return verify_bruhatmax;
  if (name == "clustercone") return verify_clustercone;
  if (name == "polypositroid") return verify_polypositroid;
  if (name == "complex") return verify_complex;
  if (name == "hhmp") return verify_hhmp;
  if (name == "gkm") return verify_gkm;
  if (name == "plucker") return verify_plucker;
  return nullptr;
}

std::vector<SuiteReport> verify_all(const VerifyContext& ctx) {
  // warm every lazily-built cache before fanning out: Bruhat bitsets,
  // sortability memos, both projections, and the c-reflection order
  ctx.w.bruhat_leq(0, 0);
  for (int x = 0; x < ctx.w.size(); ++x) {
    ctx.cam.pi_down(x);
    ctx.cam.pi_up(x);
  }
  ctx.cam.c_reflection_order();
  auto names = suite_names();
  std::vector<SuiteReport> out(names.size());
  parallel_for((int)names.size(), [&](int i) { out[i] = suite_by_name(names[i])(ctx); });
  return out;
}

}  // namespace coxcat
