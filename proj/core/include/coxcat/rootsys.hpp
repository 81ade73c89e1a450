// Crystallographic root systems and Weyl groups from a Cartan datum, with the
// classical signed-permutation models for types A, B, C, D.
//
// Conventions (matching the classical matrix models used elsewhere in the
// library):
//   type A_n : ambient Z^{n+1}, simple roots a_i = e_i - e_{i+1}, i = 1..n
//   type B_n : ambient Z^n, a_0 = e_1,        a_i = e_{i+1} - e_i
//   type C_n : ambient Z^n, a_0 = 2 e_1,      a_i = e_{i+1} - e_i
//   type D_n : ambient Z^n, a_0 = e_1 + e_2,  a_i = e_{i+1} - e_i
// Group elements act on the root lattice; one-line forms for B/C/D are signed
// permutations w(1)..w(n) with w(-i) = -w(i), printed with negatives as "-k".
#pragma once

#include "coxcat/numeric.hpp"

#include <array>
#include <map>
#include <unordered_map>

namespace coxcat {

enum class GroupType { A, B, C, D, Custom };

std::string type_name(GroupType t);
GroupType type_from_name(const std::string& s);

struct CartanDatum {
  GroupType type = GroupType::Custom;
  int rank = 0;
  std::vector<IVec> cartan;     // cartan[i][j] = <alpha_j, alpha_i^vee>
  QMat simple_roots;            // row i = ambient coordinates of alpha_i
  QMat bilinear;                // W-invariant symmetric form on the ambient space

  static CartanDatum classical(GroupType t, int rank);
  static CartanDatum custom(const std::vector<IVec>& cartan_matrix);
  void validate() const;        // throws coxcat_error on malformed input
};

// Group element as its integer action on root coordinates (row-major n x n).
struct Element {
  int n = 0;
  std::vector<int32_t> m;

  Element() = default;
  Element(int n_, std::vector<int32_t> m_) : n(n_), m(std::move(m_)) {}
  int32_t at(int i, int j) const { return m[i * n + j]; }
  bool operator==(const Element& o) const { return n == o.n && m == o.m; }
  bool operator<(const Element& o) const { return m < o.m; }
};

struct ElementHash {
  size_t operator()(const Element& e) const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : e.m) {
      h ^= (size_t)(uint32_t)v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Root {
  IVec coords;      // in the simple-root basis
  bool positive;    // consistent with coords by construction
};

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return n_; }
  GroupType type() const { return datum_.type; }
  bool classical() const { return datum_.type != GroupType::Custom; }
  int ambient_dim() const { return (int)datum_.simple_roots[0].size(); }

  // --- roots ---
  int num_positive() const { return (int)pos_roots_.size(); }
  const IVec& positive_root(int idx) const { return pos_roots_[idx]; }
  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  // index of +-root with the given coordinates, -1 if not a root
  int root_index(const IVec& coords_up_to_sign) const;
  bool is_positive_coords(const IVec& v) const;
  QVec root_ambient(int idx) const;            // ambient coordinates of a positive root
  Rat form(const QVec& a, const QVec& b) const;
  Rat root_norm2(int idx) const;
  // <v, beta^vee> = 2 (v, beta) / (beta, beta), exact
  Rat pairing_covec(const QVec& ambient_v, int root_idx) const;

  // --- elements ---
  const Element& identity() const { return id_; }
  const Element& simple(int i) const { return simple_[i]; }
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element word_to_element(const std::vector<int>& word) const;

  IVec act_root_coords(const Element& w, const IVec& v) const;
  QVec act_ambient(const Element& w, const QVec& v) const;  // preserves the form
  // root coordinates of the span component of an ambient vector
  QVec span_coordinates(const QVec& ambient) const;

  int length(const Element& w) const;  // #{b in Phi+ : w^{-1} b in Phi-}
  std::vector<int> right_descents(const Element& w) const;
  // image root index of a positive root, with sign: (idx, positive?)
  std::pair<int, bool> act_on_positive_root(const Element& w, int idx) const;
  // r(Inv(w)) = Phi+ \cap w(Phi-), as sorted positive-root indices
  std::vector<int> left_inversion_roots(const Element& w) const;
  int absolute_length(const Element& w) const;  // rank(action - id)

  // --- reflections ---
  const Element& reflection(int root_idx) const { return refl_elem_[root_idx]; }
  // reflection <-> positive root bijection r(tau); throws if not a reflection
  int root_of_reflection(const Element& tau) const;
  bool is_reflection(const Element& tau) const;

  const Element& longest_element() const { return w0_; }

  // --- classical one-line forms ---
  // type A: w(1)..w(n+1); types B/C/D: signed w(1)..w(n)
  IVec one_line(const Element& w) const;
  Element from_one_line(const IVec& ol) const;
  std::string one_line_string(const Element& w) const;
  Element parse_one_line(const std::string& s) const;

 private:
  CartanDatum datum_;
  int n_;
  std::vector<IVec> pos_roots_;
  std::map<IVec, int> root_lookup_;  // positive coords -> index
  std::vector<Element> refl_elem_;
  std::unordered_map<Element, int, ElementHash> refl_index_;
  Element id_;
  std::vector<Element> simple_;
  Element w0_;
  QMat span_solver_;  // R with R * S^T = I_n on span(Delta); maps ambient -> root coords
  QMat proj_span_;    // form-orthogonal projection ambient -> root coords

  void close_roots();
  void build_reflections();
};

// Enumerated Weyl group with canonical (lexicographically least) reduced
// words, multiplication tables and cached order data.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int size() const { return (int)elems_.size(); }
  const Element& element(int i) const { return elems_[i]; }
  int index_of(const Element& e) const;
  const std::vector<int>& canonical_word(int i) const { return canon_[i]; }
  int length(int i) const { return (int)canon_[i].size(); }
  int right(int i, int s) const { return right_[i][s]; }
  int left(int i, int s) const { return left_[i][s]; }
  int mul(int a, int b) const;   // walks the canonical word of b
  int inverse(int i) const { return inv_[i]; }
  int w0() const { return w0_; }
  int absolute_length(int i) const { return ellT_[i]; }
  int num_reflections() const { return rs_->num_positive(); }
  // group index of the reflection with positive root idx
  int reflection_index(int root_idx) const { return refl_[root_idx]; }
  // positive-root index if element i is a reflection, else -1
  int root_of(int i) const;
  // left inversions of element i as sorted positive-root indices
  const std::vector<int>& inversions(int i) const { return inv_roots_[i]; }
  std::vector<int> right_descent_set(int i) const;

  // Bruhat order (one-sided descent recursion over cached cover closure)
  bool bruhat_leq(int u, int v) const;
  std::vector<int> bruhat_lower_covers(int v) const;  // {tau v : covers}
  // support of the canonical word (set of simple indices)
  std::vector<int> support(int i) const;

 private:
  const RootSystem* rs_;
  std::vector<Element> elems_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<std::vector<int>> canon_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
  std::vector<int> inv_;
  std::vector<int> ellT_;
  std::vector<int> refl_;
  std::vector<std::vector<int>> inv_roots_;
  std::vector<std::vector<uint64_t>> below_;  // below_[v] bitset of {u : u <=_B v}
  int w0_ = -1;

  void build_bruhat();
};

}  // namespace coxcat
