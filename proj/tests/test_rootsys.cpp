#include "doctest.h"

#include "coxcat/rootsys.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace coxcat;

namespace {

RootSystem make(GroupType t, int n) { return RootSystem(CartanDatum::classical(t, n)); }

// all reduced words of w, by DFS over right descents
void all_reduced_words(const RootSystem& rs, const Element& w, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  auto desc = rs.right_descents(w);
  if (desc.empty()) {
    std::vector<int> rev(cur.rbegin(), cur.rend());
    out.push_back(rev);
    return;
  }
  for (int s : desc) {
    cur.push_back(s);
    all_reduced_words(rs, rs.mul(w, rs.simple(s)), cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("B2 roots match the epsilon-coordinate description") {
  RootSystem rs = make(GroupType::B, 2);
  REQUIRE(rs.num_positive() == 4);
  // alpha0 = e1, alpha1 = e2 - e1; positive roots a0, a1, a0+a1, 2a0+a1
  std::set<IVec> roots(rs.positive_roots().begin(), rs.positive_roots().end());
  CHECK(roots.count({1, 0}));
  CHECK(roots.count({0, 1}));
  CHECK(roots.count({1, 1}));
  CHECK(roots.count({2, 1}));
  // ambient coordinates: a0+a1 = e2, 2a0+a1 = e1+e2
  QVec e2 = rs.root_ambient(rs.root_index({1, 1}));
  CHECK(e2 == QVec{Rat(0), Rat(1)});
  QVec e12 = rs.root_ambient(rs.root_index({2, 1}));
  CHECK(e12 == QVec{Rat(1), Rat(1)});
}

TEST_CASE("A1 trivial case") {
  RootSystem rs = make(GroupType::A, 1);
  CHECK(rs.num_positive() == 1);
  CHECK(rs.longest_element() == rs.simple(0));
}

TEST_CASE("D4 closure and group size") {
  RootSystem rs = make(GroupType::D, 4);
  CHECK(rs.num_positive() == 12);
  WeylGroup w(rs);
  CHECK(w.size() == 192);
}

TEST_CASE("reflection <-> root bijection") {
  RootSystem rs = make(GroupType::B, 2);
  // r(s1 s0 s1) = a0 + a1
  Element t = rs.word_to_element({1, 0, 1});
  CHECK(rs.root_of_reflection(t) == rs.root_index({1, 1}));
  // r(s0 s1 s0) = 2a0 + a1
  Element t2 = rs.word_to_element({0, 1, 0});
  CHECK(rs.root_of_reflection(t2) == rs.root_index({2, 1}));
  // r(s_alpha) = alpha for simple alpha
  for (int i = 0; i < 2; ++i) {
    IVec a(2, 0);
    a[i] = 1;
    CHECK(rs.root_of_reflection(rs.simple(i)) == rs.root_index(a));
  }
  // round trip both ways
  for (int idx = 0; idx < rs.num_positive(); ++idx)
    CHECK(rs.root_of_reflection(rs.reflection(idx)) == idx);
  CHECK_THROWS_AS(rs.root_of_reflection(rs.word_to_element({0, 1})), coxcat_error);
}

TEST_CASE("A3 reflection of the transposition (1 4)") {
  RootSystem rs = make(GroupType::A, 3);
  Element t = rs.from_one_line({4, 2, 3, 1});
  // eps1 - eps4 = a1 + a2 + a3
  CHECK(rs.root_of_reflection(t) == rs.root_index({1, 1, 1}));
}

TEST_CASE("ambient action") {
  RootSystem rs = make(GroupType::B, 2);
  QVec e1{Rat(1), Rat(0)};
  CHECK(rs.act_ambient(rs.identity(), e1) == e1);
  // s0 . e1 = -e1
  QVec im = rs.act_ambient(rs.simple(0), e1);
  CHECK(im == QVec{Rat(-1), Rat(0)});
  CHECK_THROWS_AS(rs.act_ambient(rs.simple(0), QVec{Rat(1)}), coxcat_error);
}

TEST_CASE("random elements preserve the bilinear form") {
  for (auto [t, n] : {std::pair{GroupType::A, 3}, {GroupType::B, 3}, {GroupType::D, 4}}) {
    RootSystem rs = make(t, n);
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> word;
      for (int k = 0; k < 8; ++k) word.push_back((int)(gen() % n));
      Element w = rs.word_to_element(word);
      int amb = rs.ambient_dim();
      QVec u(amb), v(amb);
      for (int k = 0; k < amb; ++k) {
        u[k] = Rat((long)(gen() % 11) - 5);
        v[k] = Rat((long)(gen() % 11) - 5);
      }
      CHECK(rs.form(rs.act_ambient(w, u), rs.act_ambient(w, v)) == rs.form(u, v));
    }
  }
}

TEST_CASE("enumeration sizes: A2, B3 signed-permutation oracle, S5 factorial") {
  CHECK(WeylGroup(make(GroupType::A, 2)).size() == 6);
  CHECK(WeylGroup(make(GroupType::A, 4)).size() == 120);

  RootSystem rs = make(GroupType::B, 3);
  WeylGroup w(rs);
  CHECK(w.size() == 48);
  // oracle: every signed permutation of {1,2,3} is an element, all distinct
  std::set<Element> all;
  IVec perm{1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    for (int mask = 0; mask < 8; ++mask) {
      IVec ol = perm;
      for (int b = 0; b < 3; ++b)
        if (mask & (1 << b)) ol[b] = -ol[b];
      all.insert(rs.from_one_line(ol));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK((int)all.size() == 48);
  for (const auto& e : all) CHECK_NOTHROW(w.index_of(e));
}

TEST_CASE("canonical words are lexicographically least reduced words") {
  RootSystem rs = make(GroupType::B, 2);
  WeylGroup w(rs);
  for (int i = 0; i < w.size(); ++i) {
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    all_reduced_words(rs, w.element(i), cur, words);
    auto least = *std::min_element(words.begin(), words.end());
    CHECK(w.canonical_word(i) == least);
    CHECK((int)w.canonical_word(i).size() == rs.length(w.element(i)));
  }
}

TEST_CASE("r(Inv(w)) equals Phi+ cap w(Phi-)") {
  for (auto [t, n] : {std::pair{GroupType::A, 3}, {GroupType::B, 2}}) {
    RootSystem rs = make(t, n);
    WeylGroup w(rs);
    for (int i = 0; i < w.size(); ++i) {
      // direct: tau with ell(tau w) < ell(w)
      std::vector<int> direct;
      for (int r = 0; r < rs.num_positive(); ++r) {
        Element tw = rs.mul(rs.reflection(r), w.element(i));
        if (rs.length(tw) < rs.length(w.element(i))) direct.push_back(r);
      }
      CHECK(direct == w.inversions(i));
      CHECK((int)direct.size() == w.length(i));
    }
  }
}

TEST_CASE("every reflection is a conjugate of a simple reflection") {
  RootSystem rs = make(GroupType::B, 3);
  WeylGroup w(rs);
  for (int r = 0; r < rs.num_positive(); ++r) {
    bool found = false;
    for (int i = 0; i < w.size() && !found; ++i)
      for (int s = 0; s < rs.rank() && !found; ++s) {
        Element c = rs.mul(rs.mul(w.element(i), rs.simple(s)), rs.inverse(w.element(i)));
        if (c == rs.reflection(r)) found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("signed-permutation model agrees with the matrix model") {
  for (auto [t, n] : {std::pair{GroupType::B, 3}, {GroupType::C, 2}, {GroupType::D, 3}}) {
    RootSystem rs = make(t, n);
    WeylGroup w(rs);
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 40; ++trial) {
      int a = (int)(gen() % w.size()), b = (int)(gen() % w.size());
      IVec la = rs.one_line(w.element(a)), lb = rs.one_line(w.element(b));
      // compose one-lines: (a*b)(i) = a(b(i)) with a(-k) = -a(k)
      IVec lab(n);
      for (int i = 0; i < n; ++i) {
        long bi = lb[i];
        lab[i] = bi > 0 ? la[bi - 1] : -la[-bi - 1];
      }
      CHECK(rs.one_line(rs.mul(w.element(a), w.element(b))) == lab);
      CHECK(rs.from_one_line(la) == w.element(a));
    }
  }
}

TEST_CASE("type A one-line round trip") {
  RootSystem rs = make(GroupType::A, 4);
  Element w = rs.from_one_line({3, 5, 4, 2, 1});
  CHECK(rs.one_line(w) == IVec{3, 5, 4, 2, 1});
  CHECK(rs.one_line_string(w) == "3,5,4,2,1");
  CHECK(rs.parse_one_line("3,5,4,2,1") == w);
}

TEST_CASE("custom Cartan matrices") {
  // B2 fed as a custom matrix gives 4 positive roots
  RootSystem rs(CartanDatum::custom({{2, -1}, {-2, 2}}));
  CHECK(rs.num_positive() == 4);
  CHECK(WeylGroup(rs).size() == 8);
  // affine A1~ is not finite
  CHECK_THROWS_WITH_AS(RootSystem(CartanDatum::custom({{2, -2}, {-2, 2}})),
                       "not finite type", coxcat_error);
  // malformed: diagonal entry
  CHECK_THROWS_AS(CartanDatum::custom({{1}}), coxcat_error);
  // malformed: positive off-diagonal
  CHECK_THROWS_AS(CartanDatum::custom({{2, 1}, {1, 2}}), coxcat_error);
}

TEST_CASE("longest element and |Phi+| = ell(w0)") {
  for (auto [t, n] :
       {std::pair{GroupType::A, 3}, {GroupType::B, 3}, {GroupType::C, 3}, {GroupType::D, 4}}) {
    RootSystem rs = make(t, n);
    CHECK(rs.length(rs.longest_element()) == rs.num_positive());
    // w0 sends every positive root to a negative root
    for (int r = 0; r < rs.num_positive(); ++r)
      CHECK_FALSE(rs.act_on_positive_root(rs.longest_element(), r).second);
  }
}
