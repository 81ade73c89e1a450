#include "coxcat/intervals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxcat {

bool is_length_additive(const WeylGroup& w, int welem, int c) {
  return w.length(w.mul(welem, c)) == w.length(welem) + w.length(c);
}

TranslatedInterval translated_interval(const WeylGroup& w, int welem, const CoxeterElement& c) {
  if (!is_length_additive(w, welem, c.element))
    throw coxcat_error("translated_interval: ell(wc) != ell(w) + ell(c)");
  int wc = w.mul(welem, c.element);
  BruhatInterval iv = bruhat_interval(w, welem, wc);
  TranslatedInterval out;
  out.base_w = welem;
  out.coxeter = c.element;
  int winv = w.inverse(welem);
  std::map<int, int> translate;  // x -> w^{-1} x
  for (int x : iv.poset.elements) translate[x] = w.mul(winv, x);
  for (int x : iv.poset.elements) out.elements.push_back(translate[x]);
  std::sort(out.elements.begin(), out.elements.end(), [&](int a, int b) {
    int ta = w.absolute_length(a), tb = w.absolute_length(b);
    return ta != tb ? ta < tb : a < b;
  });
  out.poset.elements = out.elements;
  out.poset.bottom = translate[welem];
  out.poset.top = translate[wc];
  for (const auto& e : iv.poset.edges)
    out.poset.edges.push_back({translate[e.lower], translate[e.upper], e.label_root});

  // Bruhat-maximal element of the translated set
  int max = -1;
  for (int cand : out.elements) {
    bool above_all = true;
    for (int x : out.elements)
      if (!w.bruhat_leq(x, cand)) { above_all = false; break; }
    if (above_all) {
      if (max >= 0) throw coxcat_error("translated interval has two Bruhat maxima");
      max = cand;
    }
  }
  if (max < 0) throw coxcat_error("translated interval has no Bruhat maximum");
  out.bruhat_max = max;
  return out;
}

bool shape_equivalent(const WeylGroup& w, int u, int v, int u2, int v2) {
  if (!w.bruhat_leq(u, v) || !w.bruhat_leq(u2, v2))
    throw coxcat_error("shape_equivalent: arguments are not intervals");
  auto translate_set = [&](int bottom, int top) {
    std::set<int> out;
    int binv = w.inverse(bottom);
    for (int x = 0; x < w.size(); ++x)
      if (w.bruhat_leq(bottom, x) && w.bruhat_leq(x, top)) out.insert(w.mul(binv, x));
    return out;
  };
  return translate_set(u, v) == translate_set(u2, v2);
}

std::vector<TranslateClass> classify_translates(const Cambrian& cam) {
  const WeylGroup& w = cam.group();
  CoxeterElement c;
  c.word = cam.coxeter_word();
  c.element = cam.coxeter();
  const ReflectionOrder& ord = cam.c_reflection_order();

  std::map<std::vector<int>, TranslateClass> by_elements;
  std::map<std::vector<int>, int> class_pidown;  // interval -> pi_down(w_op)
  for (int welem = 0; welem < w.size(); ++welem) {
    if (!is_length_additive(w, welem, c.element)) continue;
    TranslatedInterval ti = translated_interval(w, welem, c);
    int wop = w.mul(w.inverse(welem), w.w0());
    int pd = cam.pi_down(wop);
    int expected_max = cam.nc_c_of_sortable(pd);
    if (ti.bruhat_max != expected_max)
      throw coxcat_error("Bruhat maximum does not match nc_c(pi_down(w_op))");
    auto it = by_elements.find(ti.elements);
    if (it == by_elements.end()) {
      TranslateClass cls;
      cls.bruhat_max = ti.bruhat_max;
      cls.elements = ti.elements;
      auto chains = decreasing_chains(ti.poset, ord);
      if (chains.size() != 1)
        throw coxcat_error("translated interval must contain a unique c-decreasing chain");
      cls.decreasing_chain = chains[0];
      cls.members.push_back(welem);
      by_elements[ti.elements] = cls;
      class_pidown[ti.elements] = pd;
    } else {
      it->second.members.push_back(welem);
      if (class_pidown[ti.elements] != pd)
        throw coxcat_error("equal translated intervals in different Cambrian classes");
    }
  }
  // distinct classes must come from distinct Cambrian classes and have
  // distinct decreasing chains
  std::set<int> pds;
  std::set<std::vector<int>> chains;
  std::vector<TranslateClass> out;
  for (auto& [key, cls] : by_elements) {
    pds.insert(class_pidown[key]);
    chains.insert(cls.decreasing_chain);
    out.push_back(cls);
  }
  if (pds.size() != by_elements.size() || chains.size() != by_elements.size())
    throw coxcat_error("translated-interval classification is not a three-way equivalence");
  std::sort(out.begin(), out.end(),
            [](const TranslateClass& a, const TranslateClass& b) {
              return a.bruhat_max < b.bruhat_max;
            });
  return out;
}

ParabolicRepresentative representative_for(const WeylGroup& w, const NcLattice& nc, int u) {
  if (!nc.contains(u)) throw coxcat_error("representative_for: element is not noncrossing");
  std::vector<int> supp = w.support(u);
  std::vector<bool> in_supp(w.root_system().rank(), false);
  for (int s : supp) in_supp[s] = true;

  ParabolicRepresentative rep;
  for (int s : nc.coxeter.word)
    if (in_supp[s]) rep.c_prime.word.push_back(s);
  rep.c_prime.element = w.index_of(w.root_system().word_to_element(rep.c_prime.word));

  if (supp.empty()) {
    rep.w_prime = 0;
    rep.interval_elements = {0};
    return rep;
  }
  // search the standard parabolic for a w' with u the Bruhat max of I(w',w'c')
  for (int cand = 0; cand < w.size(); ++cand) {
    bool inside = true;
    for (int s : w.support(cand))
      if (!in_supp[s]) { inside = false; break; }
    if (!inside) continue;
    if (!is_length_additive(w, cand, rep.c_prime.element)) continue;
    TranslatedInterval ti = translated_interval(w, cand, rep.c_prime);
    if (ti.bruhat_max == u) {
      rep.w_prime = cand;
      rep.interval_elements = ti.elements;
      return rep;
    }
  }
  throw coxcat_error("no parabolic representative found (falsifies the classification)");
}

}  // namespace coxcat
