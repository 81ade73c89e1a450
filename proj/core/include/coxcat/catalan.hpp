// Coxeter elements, the noncrossing partition lattice NC(W,c) with the
// Kreweras order, full support, noncrossing inversion sets and the
// Biane--Josuat-Verges positive-cluster map, strong closure, and unimodular
// completion of positive clusters to root-lattice bases.
#pragma once

#include "coxcat/orders.hpp"

namespace coxcat {

struct CoxeterElement {
  std::vector<int> word;  // each simple index exactly once
  int element = -1;       // group index
};

CoxeterElement coxeter_from_word(const WeylGroup& w, const std::vector<int>& word);
std::vector<CoxeterElement> enumerate_coxeter_elements(const WeylGroup& w);

// ell_T-additivity membership test: u in NC(W,c) iff ell_T(u) + ell_T(u^{-1}c) = n
bool in_nc(const WeylGroup& w, int c, int u);

bool full_support(const WeylGroup& w, int u);

struct NcLattice {
  const WeylGroup* group = nullptr;
  CoxeterElement coxeter;
  std::vector<int> elements;        // group indices, sorted by (ell_T, index)
  std::vector<int> positive_subset; // fully supported elements
  LabeledPoset kreweras;            // edges u < u*sigma labeled r(sigma)
  std::vector<char> member;         // indexed by group element

  bool contains(int u) const { return member[u]; }
  int catalan() const { return (int)elements.size(); }
  int positive_catalan() const { return (int)positive_subset.size(); }

  // Inv_NC(u): left reflections tau with ell(tau u) < ell(u) and tau u in NC,
  // as positive-root indices r(tau).
  std::vector<int> inv_nc(int u) const;
  // Clust+(u) = { r(u^{-1} tau u) : tau in Inv_NC(u) }, positive-root indices.
  std::vector<int> clust_plus(int u) const;
};

NcLattice build_nc(const WeylGroup& w, const CoxeterElement& c);

// True iff the only positive roots in Cone(roots) are the given roots.
bool strong_closure_check(const RootSystem& rs, const std::vector<int>& root_indices);

// Completes the given independent positive roots to a Z-basis of the root
// lattice; returns n integer vectors in simple-root coordinates, the first
// |input| of which are the inputs.  Throws if no unimodular completion exists.
std::vector<IVec> cluster_complete_to_basis(const RootSystem& rs,
                                            const std::vector<int>& root_indices);

}  // namespace coxcat
