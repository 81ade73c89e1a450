// c-sorting words, c-sortability, Cambrian projections pi_down/pi_up, skip
// reflections (forced/unforced), the map nc_c, and the psi labels of the
// c-decreasing chain of a translated interval.
//
// A Cambrian context memoizes per-(W, c-word) data: the sortable set, the
// downward projection, and the c-reflection order.  All queries after
// construction are pure.
#pragma once

#include "coxcat/catalan.hpp"

#include <memory>

namespace coxcat {

struct SortingWord {
  int element = -1;
  bool sortable = false;
  std::vector<int> letters;                 // simple indices in order
  std::vector<int> positions;               // 0-based positions in c^infinity
  std::vector<std::vector<int>> syllables;  // letters used per copy of c
};

struct SkipData {
  std::vector<int> positions;    // n skip positions, increasing
  std::vector<int> reflections;  // group indices of phi_1..phi_n
  std::vector<char> forced;
  std::vector<int> forced_skips;    // fs_1..fs_k, in skip-position order
  std::vector<int> unforced_skips;  // ufs_1..ufs_{n-k}
};

class Cambrian {
 public:
  Cambrian(const WeylGroup& w, std::vector<int> cword);

  const WeylGroup& group() const { return *w_; }
  const std::vector<int>& coxeter_word() const { return cword_; }
  int coxeter() const { return c_; }

  SortingWord sorting_word(int x) const;
  bool sortable(int x) const;
  const std::vector<int>& sortable_elements() const;

  int pi_down(int x) const;
  int pi_up(int x) const;

  SkipData skips(int sortable_x) const;      // throws if x is not c-sortable
  int nc_c_of_sortable(int sortable_x) const;
  int nc_c(int x) const { return nc_c_of_sortable(pi_down(x)); }

  // ell(wc) = ell(w) + ell(c)
  bool length_additive(int w_elem) const;
  // labels psi_1..psi_n (group indices of reflections) of the c-decreasing
  // chain of w^{-1}[w, wc]; requires length-additivity
  std::vector<int> psi_labels(int w_elem) const;

  const ReflectionOrder& c_reflection_order() const;

 private:
  const WeylGroup* w_;
  std::vector<int> cword_;
  int c_;
  mutable std::vector<int8_t> sortable_memo_;
  mutable std::vector<int> pi_down_memo_;
  mutable std::vector<int> sortable_list_;
  mutable std::unique_ptr<Cambrian> reversed_;
  mutable std::unique_ptr<ReflectionOrder> c_order_;

  const Cambrian& reversed() const;
};

}  // namespace coxcat
