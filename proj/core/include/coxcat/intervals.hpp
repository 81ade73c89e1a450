// Translated Bruhat intervals I(w, wc) = w^{-1}[w, wc], shape equivalence,
// the classification of equal translates by Cambrian classes, Bruhat-maximal
// elements via nc_c, and parabolic representatives for arbitrary noncrossing
// elements.
#pragma once

#include "coxcat/sortable.hpp"

namespace coxcat {

bool is_length_additive(const WeylGroup& w, int welem, int c);

struct TranslatedInterval {
  int base_w = -1;   // the translating element
  int coxeter = -1;  // c
  std::vector<int> elements;  // w^{-1}[w,wc], sorted by (ell_T, index)
  LabeledPoset poset;         // induced Hasse diagram, labels are right factors
  int bruhat_max = -1;
};

// Requires ell(wc) = ell(w) + ell(c); the poset carries the labels inherited
// from [w, wc] under left translation (right factors are unchanged).
TranslatedInterval translated_interval(const WeylGroup& w, int welem, const CoxeterElement& c);

// u2 u^{-1} [u,v] = [u2,v2], i.e. the intervals are translates of each other
bool shape_equivalent(const WeylGroup& w, int u, int v, int u2, int v2);

struct TranslateClass {
  int bruhat_max = -1;              // u in NC+, the Bruhat-maximal element
  std::vector<int> members;         // all w with this translated interval
  std::vector<int> elements;        // the common element set of I(w,wc)
  std::vector<int> decreasing_chain;  // the unique c-decreasing maximal chain
};

// Partition of {w : ell(wc) = ell(w) + ell(c)} by equal translated intervals;
// verifies the Cambrian-class and decreasing-chain characterizations and the
// Bruhat-max formula u = nc_c(pi_down(w_op)) along the way.
std::vector<TranslateClass> classify_translates(const Cambrian& cam);

// Parabolic representative: (w', c') with c' the sub-Coxeter word of c on the
// support of u and u the Bruhat-maximal element of I(w', w'c').
struct ParabolicRepresentative {
  int w_prime = -1;
  CoxeterElement c_prime;             // Coxeter element of the support parabolic
  std::vector<int> interval_elements; // I(w', w' c'), subset of NC(W,c)
};

ParabolicRepresentative representative_for(const WeylGroup& w, const NcLattice& nc, int u);

}  // namespace coxcat
