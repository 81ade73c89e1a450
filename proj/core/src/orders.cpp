#include "coxcat/orders.hpp"

#include <algorithm>

namespace coxcat {

bool weak_leq(const WeylGroup& w, int u, int v) {
  int uv = w.mul(w.inverse(u), v);
  return w.length(v) == w.length(u) + w.length(uv);
}

bool absolute_leq(const WeylGroup& w, int u, int v) {
  int uv = w.mul(w.inverse(u), v);
  return w.absolute_length(v) == w.absolute_length(u) + w.absolute_length(uv);
}

namespace {

bool subseq(const std::vector<int>& needle, const std::vector<int>& hay) {
  size_t i = 0;
  for (size_t j = 0; j < hay.size() && i < needle.size(); ++j)
    if (hay[j] == needle[i]) ++i;
  return i == needle.size();
}

// DFS over all reduced words of u; stops at the first one embedding into hay.
bool any_reduced_word_embeds(const WeylGroup& w, int u, std::vector<int>& cur,
                             const std::vector<int>& hay) {
  if (w.length(u) == 0) {
    std::vector<int> word(cur.rbegin(), cur.rend());
    return subseq(word, hay);
  }
  for (int s : w.right_descent_set(u)) {
    cur.push_back(s);
    if (any_reduced_word_embeds(w, w.right(u, s), cur, hay)) {
      cur.pop_back();
      return true;
    }
    cur.pop_back();
  }
  return false;
}

}  // namespace

bool bruhat_leq_subword(const WeylGroup& w, int u, int v) {
  // subword criterion: some reduced word of u appears as a subsequence of
  // any fixed reduced word of v
  std::vector<int> cur;
  return any_reduced_word_embeds(w, u, cur, w.canonical_word(v));
}

std::vector<HasseEdge> LabeledPoset::up(int x) const {
  std::vector<HasseEdge> out;
  for (const auto& e : edges)
    if (e.lower == x) out.push_back(e);
  return out;
}

BruhatInterval bruhat_interval(const WeylGroup& w, int u, int v) {
  if (!w.bruhat_leq(u, v)) throw coxcat_error("not a Bruhat interval: u is not below v");
  BruhatInterval iv;
  iv.bottom = u;
  iv.top = v;
  for (int x = 0; x < w.size(); ++x)
    if (w.bruhat_leq(u, x) && w.bruhat_leq(x, v)) iv.poset.elements.push_back(x);
  std::sort(iv.poset.elements.begin(), iv.poset.elements.end(), [&](int a, int b) {
    return w.length(a) != w.length(b) ? w.length(a) < w.length(b) : a < b;
  });
  std::vector<bool> in(w.size(), false);
  for (int x : iv.poset.elements) in[x] = true;
  const RootSystem& rs = w.root_system();
  for (int y : iv.poset.elements)
    for (int x : w.bruhat_lower_covers(y))
      if (in[x]) {
        Element tau = rs.mul(rs.inverse(w.element(x)), w.element(y));
        iv.poset.edges.push_back({x, y, rs.root_of_reflection(tau)});
      }
  iv.poset.bottom = u;
  iv.poset.top = v;
  return iv;
}

ReflectionOrder reflection_order_from_word(const WeylGroup& w, const std::vector<int>& word) {
  const RootSystem& rs = w.root_system();
  Element e = rs.word_to_element(word);
  if ((int)word.size() != rs.length(e))
    throw coxcat_error("reflection order needs a reduced word");
  ReflectionOrder ord;
  ord.source_word = word;
  ord.position.assign(rs.num_positive(), -1);
  Element prefix = rs.identity();
  for (size_t j = 0; j < word.size(); ++j) {
    // tau_j = s_1 ... s_j ... s_1
    Element tau = rs.mul(rs.mul(prefix, rs.simple(word[j])), rs.inverse(prefix));
    int r = rs.root_of_reflection(tau);
    if (ord.position[r] != -1) throw coxcat_error("inversion sequence repeats a reflection");
    ord.position[r] = (int)j;
    ord.order.push_back(r);
    prefix = rs.mul(prefix, rs.simple(word[j]));
  }
  return ord;
}

bool is_reflection_order(const RootSystem& rs, const ReflectionOrder& ord) {
  int m = rs.num_positive();
  if ((int)ord.order.size() != m) return false;
  for (int r = 0; r < m; ++r)
    if (ord.position[r] < 0) return false;
  int amb = rs.ambient_dim();
  for (int b = 0; b < m; ++b)
    for (int c = b + 1; c < m; ++c) {
      QVec vb = rs.root_ambient(b), vc = rs.root_ambient(c);
      QMat sys;
      for (int k = 0; k < amb; ++k) sys.push_back({vb[k], vc[k]});
      for (int a = 0; a < m; ++a) {
        if (a == b || a == c) continue;
        auto sol = solve_linear(sys, rs.root_ambient(a));
        if (!sol || (*sol)[0] <= 0 || (*sol)[1] <= 0) continue;
        int pa = ord.position[a], pb = ord.position[b], pc = ord.position[c];
        if (!((pb < pa && pa < pc) || (pc < pa && pa < pb))) return false;
      }
    }
  return true;
}

namespace {

void chain_dfs(const LabeledPoset& p, const ReflectionOrder& ord, bool decreasing, int at,
               int last_label, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (at == p.top) {
    out.push_back(cur);
    return;
  }
  for (const auto& e : p.edges) {
    if (e.lower != at) continue;
    bool ok = last_label < 0 || (decreasing ? ord.less(e.label_root, last_label)
                                            : ord.less(last_label, e.label_root));
    if (!ok) continue;
    cur.push_back(e.upper);
    chain_dfs(p, ord, decreasing, e.upper, e.label_root, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> decreasing_chains(const LabeledPoset& p, const ReflectionOrder& ord) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{p.bottom};
  chain_dfs(p, ord, true, p.bottom, -1, cur, out);
  return out;
}

std::vector<std::vector<int>> increasing_chains(const LabeledPoset& p, const ReflectionOrder& ord) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{p.bottom};
  chain_dfs(p, ord, false, p.bottom, -1, cur, out);
  return out;
}

}  // namespace coxcat
