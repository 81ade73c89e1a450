#include "coxcat/sortable.hpp"

#include <algorithm>
#include <set>

namespace coxcat {

Cambrian::Cambrian(const WeylGroup& w, std::vector<int> cword) : w_(&w), cword_(std::move(cword)) {
  c_ = coxeter_from_word(w, cword_).element;
  sortable_memo_.assign(w.size(), -1);
  pi_down_memo_.assign(w.size(), -1);
}

SortingWord Cambrian::sorting_word(int x) const {
  const WeylGroup& w = *w_;
  int n = (int)cword_.size();
  SortingWord sw;
  sw.element = x;
  int rem = x;
  int pos = 0;
  int guard = (w.length(x) + 1) * n;
  while (w.length(rem) > 0) {
    if (pos > guard) throw coxcat_error("sorting word extraction did not terminate");
    int s = cword_[pos % n];
    int srem = w.left(rem, s);
    if (w.length(srem) < w.length(rem)) {
      sw.letters.push_back(s);
      sw.positions.push_back(pos);
      rem = srem;
    }
    ++pos;
  }
  int copies = sw.positions.empty() ? 0 : sw.positions.back() / n + 1;
  sw.syllables.assign(copies, {});
  for (size_t i = 0; i < sw.letters.size(); ++i)
    sw.syllables[sw.positions[i] / n].push_back(sw.letters[i]);
  // weakly nested syllables: each contains every letter of the next
  sw.sortable = true;
  for (int k = 0; k + 1 < copies && sw.sortable; ++k) {
    std::set<int> cur(sw.syllables[k].begin(), sw.syllables[k].end());
    for (int s : sw.syllables[k + 1])
      if (!cur.count(s)) { sw.sortable = false; break; }
  }
  return sw;
}

bool Cambrian::sortable(int x) const {
  if (sortable_memo_[x] < 0) sortable_memo_[x] = sorting_word(x).sortable ? 1 : 0;
  return sortable_memo_[x] == 1;
}

const std::vector<int>& Cambrian::sortable_elements() const {
  if (sortable_list_.empty()) {
    for (int x = 0; x < w_->size(); ++x)
      if (sortable(x)) sortable_list_.push_back(x);
  }
  return sortable_list_;
}

int Cambrian::pi_down(int x) const {
  if (pi_down_memo_[x] >= 0) return pi_down_memo_[x];
  const WeylGroup& w = *w_;
  std::vector<int> eligible;
  int maxlen = -1;
  for (int z : sortable_elements())
    if (weak_leq(w, z, x)) {
      eligible.push_back(z);
      maxlen = std::max(maxlen, w.length(z));
    }
  int best = -1;
  for (int z : eligible)
    if (w.length(z) == maxlen) {
      if (best >= 0) throw coxcat_error("pi_down: maximum sortable element below x is not unique");
      best = z;
    }
  pi_down_memo_[x] = best;
  return best;
}

const Cambrian& Cambrian::reversed() const {
  if (!reversed_) {
    std::vector<int> rev(cword_.rbegin(), cword_.rend());
    reversed_ = std::make_unique<Cambrian>(*w_, rev);
  }
  return *reversed_;
}

int Cambrian::pi_up(int x) const {
  // pi_up(x) = pi_down^{(c^-1)}(x w0) w0
  const WeylGroup& w = *w_;
  int xw0 = w.mul(x, w.w0());
  return w.mul(reversed().pi_down(xw0), w.w0());
}

SkipData Cambrian::skips(int x) const {
  const WeylGroup& w = *w_;
  int n = (int)cword_.size();
  SortingWord sw = sorting_word(x);
  if (!sw.sortable) throw coxcat_error("skips: element is not c-sortable");

  // For each simple s: the sorting word uses the first m_s copies of s in
  // c^infinity, so the skip position of s is its (m_s+1)st occurrence.
  std::vector<int> uses(n, 0);
  for (int s : sw.letters) ++uses[s];
  std::vector<int> offset(n, -1);
  for (int i = 0; i < n; ++i) offset[cword_[i]] = i;
  std::vector<std::pair<int, int>> skip_pos;  // (position, simple)
  for (int s = 0; s < n; ++s) skip_pos.push_back({uses[s] * n + offset[s], s});
  std::sort(skip_pos.begin(), skip_pos.end());

  SkipData sd;
  for (auto [p, s] : skip_pos) {
    // prefix of the sorting word strictly before position p
    int y = 0;  // identity has index 0
    for (size_t i = 0; i < sw.positions.size() && sw.positions[i] < p; ++i)
      y = w.right(y, sw.letters[i]);
    int phi = w.mul(w.mul(y, w.right(0, s)), w.inverse(y));  // y s y^{-1}
    sd.positions.push_back(p);
    sd.reflections.push_back(phi);
    bool is_forced = w.length(w.right(y, s)) < w.length(y);
    sd.forced.push_back(is_forced);
    (is_forced ? sd.forced_skips : sd.unforced_skips).push_back(phi);
  }
  return sd;
}

int Cambrian::nc_c_of_sortable(int x) const {
  const WeylGroup& w = *w_;
  SkipData sd = skips(x);
  int u = 0;
  for (int phi : sd.forced_skips) u = w.mul(u, phi);
  return u;
}

bool Cambrian::length_additive(int x) const {
  const WeylGroup& w = *w_;
  return w.length(w.mul(x, c_)) == w.length(x) + w.length(c_);
}

std::vector<int> Cambrian::psi_labels(int welem) const {
  const WeylGroup& w = *w_;
  if (!length_additive(welem)) throw coxcat_error("psi_labels: ell(wc) != ell(w) + ell(c)");
  int wop = w.mul(w.inverse(welem), w.w0());
  int x = pi_down(wop);
  int cx = w.mul(w.inverse(c_), x);  // c^{-1} x, c-sortable since c <=_R x
  SkipData sd = skips(cx);
  std::vector<int> psi;
  int prefix = 0;
  for (int i = 0; i < (int)sd.reflections.size(); ++i) {
    int phi = sd.reflections[i];
    psi.push_back(w.mul(w.mul(prefix, phi), w.inverse(prefix)));
    prefix = w.mul(prefix, phi);
  }
  return psi;
}

const ReflectionOrder& Cambrian::c_reflection_order() const {
  if (!c_order_) {
    SortingWord sw = sorting_word(w_->w0());
    c_order_ = std::make_unique<ReflectionOrder>(reflection_order_from_word(*w_, sw.letters));
  }
  return *c_order_;
}

}  // namespace coxcat
