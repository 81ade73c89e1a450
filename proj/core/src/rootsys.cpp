#include "coxcat/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace coxcat {

std::string type_name(GroupType t) {
  switch (t) {
    case GroupType::A: return "A";
    case GroupType::B: return "B";
    case GroupType::C: return "C";
    case GroupType::D: return "D";
    default: return "Custom";
  }
}

GroupType type_from_name(const std::string& s) {
  if (s == "A" || s == "a") return GroupType::A;
  if (s == "B" || s == "b") return GroupType::B;
  if (s == "C" || s == "c") return GroupType::C;
  if (s == "D" || s == "d") return GroupType::D;
  if (s == "Custom" || s == "custom") return GroupType::Custom;
  throw coxcat_error("unknown group type: " + s);
}

CartanDatum CartanDatum::classical(GroupType t, int n) {
  if (n < 1) throw coxcat_error("rank must be positive");
  if (t == GroupType::D && n < 2) throw coxcat_error("type D needs rank >= 2");
  CartanDatum d;
  d.type = t;
  d.rank = n;
  int amb = (t == GroupType::A) ? n + 1 : n;
  d.simple_roots = qmat(n, amb);
  d.bilinear = qmat(amb, amb);
  // Normalized so short roots have squared length 2 in every type.
  for (int i = 0; i < amb; ++i) d.bilinear[i][i] = (t == GroupType::B) ? 2 : 1;
  switch (t) {
    case GroupType::A:
      for (int i = 0; i < n; ++i) {
        d.simple_roots[i][i] = 1;
        d.simple_roots[i][i + 1] = -1;
      }
      break;
    case GroupType::B:
      d.simple_roots[0][0] = 1;
      break;
    case GroupType::C:
      d.simple_roots[0][0] = 2;
      break;
    case GroupType::D:
      d.simple_roots[0][0] = 1;
      d.simple_roots[0][1] = 1;
      break;
    default:
      throw coxcat_error("classical() needs type A/B/C/D");
  }
  if (t != GroupType::A)
    for (int i = 1; i < n; ++i) {
      d.simple_roots[i][i - 1] = -1;
      d.simple_roots[i][i] = 1;
    }
  // Cartan entries from the form: c[i][j] = 2 (a_i, a_j) / (a_i, a_i).
  auto form = [&](int i, int j) {
    Rat s(0);
    for (int k = 0; k < amb; ++k)
      for (int l = 0; l < amb; ++l)
        s += d.simple_roots[i][k] * d.bilinear[k][l] * d.simple_roots[j][l];
    return s;
  };
  d.cartan.assign(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = 2 * form(i, j) / form(i, i);
      if (c.get_den() != 1) throw coxcat_error("non-crystallographic datum");
      d.cartan[i][j] = (long)c.get_num().get_si();
    }
  return d;
}

CartanDatum CartanDatum::custom(const std::vector<IVec>& cm) {
  CartanDatum d;
  d.type = GroupType::Custom;
  d.rank = (int)cm.size();
  d.cartan = cm;
  int n = d.rank;
  // Symmetrize: find d_i > 0 with d_i c[i][j] = d_j c[j][i], propagated over
  // the Coxeter graph one component at a time.
  QVec diag(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (diag[start] != 0) continue;
    diag[start] = 2;
    std::deque<int> q{start};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || cm[i][j] == 0 || cm[j][i] == 0) continue;
        Rat want = diag[i] * Rat(cm[i][j]) / Rat(cm[j][i]);
        if (diag[j] == 0) {
          diag[j] = want;
          q.push_back(j);
        } else if (diag[j] != want) {
          throw coxcat_error("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  d.simple_roots = qidentity(n);
  d.bilinear = qmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.bilinear[i][j] = diag[i] * Rat(cm[i][j]) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.bilinear[i][j] != d.bilinear[j][i])
        throw coxcat_error("Cartan matrix is not symmetrizable");
  d.validate();
  return d;
}

void CartanDatum::validate() const {
  int n = rank;
  if (n < 1 || (int)cartan.size() != n) throw coxcat_error("cartan matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    if ((int)cartan[i].size() != n) throw coxcat_error("cartan matrix not square");
    if (cartan[i][i] != 2) throw coxcat_error("cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan[i][j] > 0) throw coxcat_error("cartan off-diagonal must be <= 0");
      if (i != j && ((cartan[i][j] == 0) != (cartan[j][i] == 0)))
        throw coxcat_error("cartan zero pattern must be symmetric");
    }
  }
  if ((int)simple_roots.size() != n) throw coxcat_error("need one simple root per rank");
  int amb = (int)simple_roots[0].size();
  auto form = [&](const QVec& a, const QVec& b) {
    Rat s(0);
    for (int k = 0; k < amb; ++k)
      for (int l = 0; l < amb; ++l) s += a[k] * bilinear[k][l] * b[l];
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = 2 * form(simple_roots[i], simple_roots[j]) / form(simple_roots[i], simple_roots[i]);
      if (c != Rat(cartan[i][j]))
        throw coxcat_error("bilinear form does not reproduce the Cartan matrix");
    }
  for (int i = 0; i < n; ++i) {
    QMat sigma = qidentity(amb);
    Rat nrm = form(simple_roots[i], simple_roots[i]);
    for (int c = 0; c < amb; ++c) {
      QVec e(amb, Rat(0));
      e[c] = 1;
      Rat pair = 2 * form(e, simple_roots[i]) / nrm;
      for (int r = 0; r < amb; ++r) sigma[r][c] -= pair * simple_roots[i][r];
    }
    if (mat_mul(mat_mul(mat_transpose(sigma), bilinear), sigma) != bilinear)
      throw coxcat_error("bilinear form is not W-invariant");
  }
}

namespace {
constexpr int kRootCap = 10000;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)), n_(datum_.rank) {
  datum_.validate();
  id_ = Element(n_, std::vector<int32_t>(n_ * n_, 0));
  for (int i = 0; i < n_; ++i) id_.m[i * n_ + i] = 1;
  simple_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    Element s = id_;
    for (int j = 0; j < n_; ++j) s.m[i * n_ + j] -= (int32_t)datum_.cartan[i][j];
    simple_[i] = s;
  }
  close_roots();
  build_reflections();

  // Form-orthogonal projection ambient -> root coordinates.
  const QMat& S = datum_.simple_roots;  // n x amb
  QMat SB = mat_mul(S, datum_.bilinear);
  QMat gram = mat_mul(SB, mat_transpose(S));
  auto gram_inv = mat_inverse(gram);
  if (!gram_inv) throw coxcat_error("simple roots are linearly dependent");
  proj_span_ = mat_mul(*gram_inv, SB);

  // Longest element by greedy ascent in right weak order.
  Element x = id_;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n_; ++i) {
      IVec a(n_, 0);
      a[i] = 1;
      if (is_positive_coords(act_root_coords(x, a))) {
        x = mul(x, simple_[i]);
        moved = true;
        break;
      }
    }
  }
  w0_ = x;
}

void RootSystem::close_roots() {
  std::map<IVec, bool> seen;
  std::deque<IVec> work;
  for (int i = 0; i < n_; ++i) {
    IVec a(n_, 0);
    a[i] = 1;
    seen[a] = false;
    work.push_back(a);
  }
  while (!work.empty()) {
    IVec v = work.front();
    work.pop_front();
    for (int i = 0; i < n_; ++i) {
      long acc = 0;
      for (int j = 0; j < n_; ++j) acc += datum_.cartan[i][j] * v[j];
      IVec w = v;
      w[i] = v[i] - acc;
      if (!seen.count(w)) {
        seen[w] = false;
        work.push_back(w);
        if ((int)seen.size() > 2 * kRootCap) throw coxcat_error("not finite type");
      }
    }
  }
  for (auto& [v, unused] : seen) {
    (void)unused;
    bool pos = true, neg = true;
    for (long c : v) {
      if (c < 0) pos = false;
      if (c > 0) neg = false;
    }
    if (!pos && !neg) throw coxcat_error("root closure produced a mixed-sign vector");
    if (pos) pos_roots_.push_back(v);
  }
  std::sort(pos_roots_.begin(), pos_roots_.end(), [](const IVec& a, const IVec& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (int i = 0; i < (int)pos_roots_.size(); ++i) root_lookup_[pos_roots_[i]] = i;
}

void RootSystem::build_reflections() {
  refl_elem_.resize(pos_roots_.size());
  for (int idx = 0; idx < (int)pos_roots_.size(); ++idx) {
    QVec beta = root_ambient(idx);
    Rat nrm = form(beta, beta);
    Element s(n_, std::vector<int32_t>(n_ * n_, 0));
    for (int j = 0; j < n_; ++j) {
      QVec aj(datum_.simple_roots[j].begin(), datum_.simple_roots[j].end());
      Rat pair = 2 * form(aj, beta) / nrm;
      if (pair.get_den() != 1) throw coxcat_error("non-crystallographic pairing");
      for (int i = 0; i < n_; ++i) {
        Rat val = Rat(i == j ? 1 : 0) - pair * Rat(pos_roots_[idx][i]);
        s.m[i * n_ + j] = (int32_t)val.get_num().get_si();
      }
    }
    refl_elem_[idx] = s;
    refl_index_[s] = idx;
  }
}

int RootSystem::root_index(const IVec& v) const {
  auto it = root_lookup_.find(v);
  if (it != root_lookup_.end()) return it->second;
  IVec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  it = root_lookup_.find(neg);
  if (it != root_lookup_.end()) return it->second;
  return -1;
}

bool RootSystem::is_positive_coords(const IVec& v) const {
  for (long c : v)
    if (c < 0) return false;
  return true;
}

QVec RootSystem::root_ambient(int idx) const {
  const IVec& c = pos_roots_[idx];
  int amb = ambient_dim();
  QVec v(amb, Rat(0));
  for (int i = 0; i < n_; ++i)
    if (c[i] != 0)
      for (int k = 0; k < amb; ++k) v[k] += Rat(c[i]) * datum_.simple_roots[i][k];
  return v;
}

Rat RootSystem::form(const QVec& a, const QVec& b) const {
  Rat s(0);
  int amb = ambient_dim();
  for (int k = 0; k < amb; ++k) {
    if (a[k] == 0) continue;
    for (int l = 0; l < amb; ++l)
      if (datum_.bilinear[k][l] != 0 && b[l] != 0) s += a[k] * datum_.bilinear[k][l] * b[l];
  }
  return s;
}

Rat RootSystem::root_norm2(int idx) const {
  QVec b = root_ambient(idx);
  return form(b, b);
}

Rat RootSystem::pairing_covec(const QVec& v, int idx) const {
  QVec beta = root_ambient(idx);
  return 2 * form(v, beta) / form(beta, beta);
}

Element RootSystem::mul(const Element& a, const Element& b) const {
  Element r(n_, std::vector<int32_t>(n_ * n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      int32_t aik = a.m[i * n_ + k];
      if (!aik) continue;
      for (int j = 0; j < n_; ++j) r.m[i * n_ + j] += aik * b.m[k * n_ + j];
    }
  return r;
}

Element RootSystem::inverse(const Element& a) const {
  QMat m = qmat(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = (long)a.m[i * n_ + j];
  auto inv = mat_inverse(m);
  if (!inv) throw coxcat_error("element matrix not invertible");
  Element r(n_, std::vector<int32_t>(n_ * n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if ((*inv)[i][j].get_den() != 1) throw coxcat_error("element inverse not integral");
      r.m[i * n_ + j] = (int32_t)(*inv)[i][j].get_num().get_si();
    }
  return r;
}

Element RootSystem::word_to_element(const std::vector<int>& word) const {
  Element e = id_;
  for (int s : word) {
    if (s < 0 || s >= n_) throw coxcat_error("simple index out of range");
    e = mul(e, simple_[s]);
  }
  return e;
}

IVec RootSystem::act_root_coords(const Element& w, const IVec& v) const {
  IVec r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += (long)w.m[i * n_ + j] * v[j];
  return r;
}

QVec RootSystem::act_ambient(const Element& w, const QVec& v) const {
  if ((int)v.size() != ambient_dim()) throw coxcat_error("ambient dimension mismatch");
  QVec x = mat_vec(proj_span_, v);
  QVec wx(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (w.m[i * n_ + j] != 0) wx[i] += Rat((long)w.m[i * n_ + j]) * x[j];
  QVec out = v;
  int amb = ambient_dim();
  for (int i = 0; i < n_; ++i) {
    Rat diff = wx[i] - x[i];
    if (diff == 0) continue;
    for (int k = 0; k < amb; ++k) out[k] += diff * datum_.simple_roots[i][k];
  }
  return out;
}

QVec RootSystem::span_coordinates(const QVec& ambient) const {
  if ((int)ambient.size() != ambient_dim()) throw coxcat_error("ambient dimension mismatch");
  return mat_vec(proj_span_, ambient);
}

int RootSystem::length(const Element& w) const {
  int count = 0;
  for (const IVec& b : pos_roots_)
    if (!is_positive_coords(act_root_coords(w, b))) ++count;
  return count;
}

std::vector<int> RootSystem::right_descents(const Element& w) const {
  std::vector<int> d;
  for (int i = 0; i < n_; ++i) {
    IVec a(n_, 0);
    a[i] = 1;
    if (!is_positive_coords(act_root_coords(w, a))) d.push_back(i);
  }
  return d;
}

std::pair<int, bool> RootSystem::act_on_positive_root(const Element& w, int idx) const {
  IVec im = act_root_coords(w, pos_roots_[idx]);
  bool pos = is_positive_coords(im);
  if (!pos)
    for (auto& c : im) c = -c;
  auto it = root_lookup_.find(im);
  if (it == root_lookup_.end()) throw coxcat_error("image of a root is not a root");
  return {it->second, pos};
}

std::vector<int> RootSystem::left_inversion_roots(const Element& w) const {
  std::vector<int> out;
  for (int idx = 0; idx < (int)pos_roots_.size(); ++idx) {
    auto [im, pos] = act_on_positive_root(w, idx);
    if (!pos) out.push_back(im);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int RootSystem::absolute_length(const Element& w) const {
  std::vector<std::vector<long>> m(n_, std::vector<long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = (long)w.m[i * n_ + j] - (i == j ? 1 : 0);
  return int_mat_rank(std::move(m));
}

bool RootSystem::is_reflection(const Element& tau) const {
  return refl_index_.count(tau) > 0;
}

int RootSystem::root_of_reflection(const Element& tau) const {
  auto it = refl_index_.find(tau);
  if (it == refl_index_.end()) throw coxcat_error("element is not a reflection");
  return it->second;
}

IVec RootSystem::one_line(const Element& w) const {
  if (!classical()) throw coxcat_error("one-line form requires a classical type");
  int amb = ambient_dim();
  IVec ol;
  for (int i = 0; i < amb; ++i) {
    QVec e(amb, Rat(0));
    e[i] = 1;
    QVec im = act_ambient(w, e);
    int hits = 0;
    long val = 0;
    for (int k = 0; k < amb; ++k) {
      if (im[k] == 0) continue;
      if (im[k] == 1)
        val = k + 1;
      else if (im[k] == -1)
        val = -(k + 1);
      else
        throw coxcat_error("ambient action is not a signed permutation");
      ++hits;
    }
    if (hits != 1) throw coxcat_error("ambient action is not a signed permutation");
    ol.push_back(val);
  }
  return ol;
}

Element RootSystem::from_one_line(const IVec& ol) const {
  if (!classical()) throw coxcat_error("one-line form requires a classical type");
  int amb = ambient_dim();
  if ((int)ol.size() != amb) throw coxcat_error("one-line length mismatch");
  std::vector<bool> used(amb, false);
  int negs = 0;
  for (long v : ol) {
    long a = std::abs(v);
    if (a < 1 || a > amb || used[a - 1]) throw coxcat_error("invalid one-line form");
    if (type() == GroupType::A && v < 0) throw coxcat_error("type A one-line must be positive");
    if (v < 0) ++negs;
    used[a - 1] = true;
  }
  if (type() == GroupType::D && negs % 2 != 0)
    throw coxcat_error("type D one-line needs an even number of sign changes");
  auto eps = [&](long v) {
    QVec e(amb, Rat(0));
    e[std::abs(v) - 1] = (v > 0) ? 1 : -1;
    return e;
  };
  Element r(n_, std::vector<int32_t>(n_ * n_, 0));
  for (int j = 0; j < n_; ++j) {
    QVec img;
    switch (type()) {
      case GroupType::A: img = eps(ol[j]) - eps(ol[j + 1]); break;
      case GroupType::B: img = (j == 0) ? eps(ol[0]) : eps(ol[j]) - eps(ol[j - 1]); break;
      case GroupType::C:
        img = (j == 0) ? Rat(2) * eps(ol[0]) : eps(ol[j]) - eps(ol[j - 1]);
        break;
      case GroupType::D:
        img = (j == 0) ? eps(ol[0]) + eps(ol[1]) : eps(ol[j]) - eps(ol[j - 1]);
        break;
      default: throw coxcat_error("unreachable");
    }
    QVec x = mat_vec(proj_span_, img);
    for (int i = 0; i < n_; ++i) {
      if (x[i].get_den() != 1) throw coxcat_error("one-line does not define a lattice map");
      r.m[i * n_ + j] = (int32_t)x[i].get_num().get_si();
    }
  }
  (void)inverse(r);  // sanity: unimodular
  return r;
}

std::string RootSystem::one_line_string(const Element& w) const {
  IVec ol = one_line(w);
  std::ostringstream os;
  for (size_t i = 0; i < ol.size(); ++i) {
    if (i) os << ",";
    os << ol[i];
  }
  return os.str();
}

Element RootSystem::parse_one_line(const std::string& s) const {
  IVec ol;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) ol.push_back(std::stol(tok));
  return from_one_line(ol);
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  int n = rs.rank();
  std::vector<Element> level{rs.identity()};
  std::vector<std::vector<int>> level_words{{}};
  elems_.push_back(rs.identity());
  canon_.push_back({});
  index_[rs.identity()] = 0;

  while (!level.empty()) {
    std::map<Element, std::vector<int>> next;
    for (size_t k = 0; k < level.size(); ++k) {
      for (int s = 0; s < n; ++s) {
        IVec a(n, 0);
        a[s] = 1;
        if (!rs.is_positive_coords(rs.act_root_coords(level[k], a))) continue;
        Element y = rs.mul(level[k], rs.simple(s));
        std::vector<int> w = level_words[k];
        w.push_back(s);
        auto it = next.find(y);
        if (it == next.end() || w < it->second) next[y] = std::move(w);
      }
    }
    level.clear();
    level_words.clear();
    std::vector<std::pair<std::vector<int>, Element>> sorted;
    sorted.reserve(next.size());
    for (auto& [e, w] : next) sorted.push_back({w, e});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [w, e] : sorted) {
      index_[e] = (int)elems_.size();
      elems_.push_back(e);
      canon_.push_back(w);
      level.push_back(e);
      level_words.push_back(w);
    }
  }

  int N = (int)elems_.size();
  right_.assign(N, std::vector<int>(n));
  left_.assign(N, std::vector<int>(n));
  inv_.resize(N);
  ellT_.resize(N);
  inv_roots_.resize(N);
  for (int i = 0; i < N; ++i) {
    for (int s = 0; s < n; ++s) {
      right_[i][s] = index_.at(rs.mul(elems_[i], rs.simple(s)));
      left_[i][s] = index_.at(rs.mul(rs.simple(s), elems_[i]));
    }
    inv_[i] = index_.at(rs.inverse(elems_[i]));
    ellT_[i] = rs.absolute_length(elems_[i]);
    inv_roots_[i] = rs.left_inversion_roots(elems_[i]);
  }
  refl_.resize(rs.num_positive());
  for (int r = 0; r < rs.num_positive(); ++r) refl_[r] = index_.at(rs.reflection(r));
  w0_ = index_.at(rs.longest_element());
}

int WeylGroup::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw coxcat_error("element does not belong to this group");
  return it->second;
}

int WeylGroup::mul(int a, int b) const {
  int x = a;
  for (int s : canon_[b]) x = right_[x][s];
  return x;
}

int WeylGroup::root_of(int i) const {
  if (!rs_->is_reflection(elems_[i])) return -1;
  return rs_->root_of_reflection(elems_[i]);
}

std::vector<int> WeylGroup::right_descent_set(int i) const {
  std::vector<int> d;
  for (int s = 0; s < (int)right_[i].size(); ++s)
    if (length(right_[i][s]) < length(i)) d.push_back(s);
  return d;
}

std::vector<int> WeylGroup::bruhat_lower_covers(int v) const {
  std::vector<int> out;
  for (int r : inv_roots_[v]) {
    int tv = mul(refl_[r], v);
    if (length(tv) == length(v) - 1) out.push_back(tv);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void WeylGroup::build_bruhat() {
  int N = size();
  int words = (N + 63) / 64;
  below_.assign(N, std::vector<uint64_t>(words, 0));
  for (int v = 0; v < N; ++v) {
    below_[v][v / 64] |= (1ull << (v % 64));
    for (int c : bruhat_lower_covers(v))
      for (int k = 0; k < words; ++k) below_[v][k] |= below_[c][k];
  }
}

bool WeylGroup::bruhat_leq(int u, int v) const {
  if (below_.empty()) const_cast<WeylGroup*>(this)->build_bruhat();
  return (below_[v][u / 64] >> (u % 64)) & 1;
}

std::vector<int> WeylGroup::support(int i) const {
  std::vector<bool> seen(right_[0].size(), false);
  for (int s : canon_[i]) seen[s] = true;
  std::vector<int> out;
  for (int s = 0; s < (int)seen.size(); ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

}  // namespace coxcat
