// Bruhat, weak, and absolute orders on an enumerated Weyl group; Bruhat
// intervals with reflection edge labels; Dyer reflection orders; decreasing
// chain counts for EL-labeled posets.
//
// Edge labels are right factors: the edge x < y = x*tau is labeled by the
// reflection tau = x^{-1} y (stored as a positive-root index).  Right factors
// are invariant under left translation, which is what makes translated
// intervals inherit the labeling of NC(W,c).
#pragma once

#include "coxcat/rootsys.hpp"

namespace coxcat {

bool weak_leq(const WeylGroup& w, int u, int v);        // u <=_R v
bool absolute_leq(const WeylGroup& w, int u, int v);    // u <=_T v

// subword criterion, used as a test oracle for WeylGroup::bruhat_leq
bool bruhat_leq_subword(const WeylGroup& w, int u, int v);

struct HasseEdge {
  int lower = 0, upper = 0;
  int label_root = 0;  // r(x^{-1} y) as a positive-root index
};

// A finite graded poset given by its Hasse diagram, with reflection labels.
struct LabeledPoset {
  std::vector<int> elements;     // group indices, sorted by rank
  std::vector<HasseEdge> edges;  // lower/upper are group indices
  int bottom = -1, top = -1;

  std::vector<HasseEdge> up(int x) const;
};

struct BruhatInterval {
  int bottom, top;
  LabeledPoset poset;
};

BruhatInterval bruhat_interval(const WeylGroup& w, int u, int v);

struct ReflectionOrder {
  std::vector<int> order;       // positive-root indices, increasing
  std::vector<int> position;    // position[root] = rank in the order
  std::vector<int> source_word; // reduced word for w0 that induced it

  bool less(int root_a, int root_b) const { return position[root_a] < position[root_b]; }
};

// Inversion sequence tau_j = s_1 ... s_j ... s_1 of a reduced word; for a
// reduced word of w0 this is a Dyer reflection order.
ReflectionOrder reflection_order_from_word(const WeylGroup& w, const std::vector<int>& word);

// Betweenness axiom: whenever alpha is a positive combination of beta and
// gamma, t_alpha sits between t_beta and t_gamma.
bool is_reflection_order(const RootSystem& rs, const ReflectionOrder& ord);

// Maximal chains of the poset whose label sequences strictly decrease in the
// given order.  Chains are returned as element sequences bottom..top.
std::vector<std::vector<int>> decreasing_chains(const LabeledPoset& p, const ReflectionOrder& ord);
std::vector<std::vector<int>> increasing_chains(const LabeledPoset& p, const ReflectionOrder& ord);

}  // namespace coxcat
