#include "doctest.h"

#include "coxcat/charts.hpp"

#include <map>
#include <set>

using namespace coxcat;

namespace {
struct Ctx {
  RootSystem rs;
  WeylGroup w;
  explicit Ctx(GroupType t, int n) : rs(CartanDatum::classical(t, n)), w(rs) {}
};

using Pat = std::vector<std::string>;

void check_patterns(const Ctx& c, const NcLattice* nc, const std::map<IVec, Pat>& expected) {
  for (const auto& [ol, pat] : expected) {
    int u = c.w.index_of(c.rs.from_one_line(ol));
    ChartPattern p = nc ? nc_cell_chart(c.w, *nc, u) : schubert_chart(c.w, u);
    CHECK_MESSAGE(render_pattern(p) == pat, "one-line ", c.rs.one_line_string(c.w.element(u)));
  }
}
}  // namespace

TEST_CASE("type A full Schubert patterns (GL3)") {
  Ctx c(GroupType::A, 2);
  std::map<IVec, Pat> expected = {
      {{1, 2, 3}, {"1..", ".1.", "..1"}}, {{2, 1, 3}, {"*1.", "1..", "..1"}},
      {{1, 3, 2}, {"1..", ".*1", ".1."}}, {{2, 3, 1}, {"**1", "1..", ".1."}},
      {{3, 1, 2}, {"*1.", "*.1", "1.."}}, {{3, 2, 1}, {"**1", "*1.", "1.."}},
  };
  check_patterns(c, nullptr, expected);
  for (const auto& [ol, pat] : expected) {
    int u = c.w.index_of(c.rs.from_one_line(ol));
    CHECK(schubert_chart(c.w, u).star_count() == c.w.length(u));
  }
}

TEST_CASE("type A NC patterns for both Coxeter elements of S3") {
  Ctx c(GroupType::A, 2);
  {
    NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {1, 0}));  // c = s2 s1
    std::map<IVec, Pat> expected = {
        {{1, 2, 3}, {"1..", ".1.", "..1"}},
        {{2, 1, 3}, {"*1.", "1..", "..1"}},
        {{1, 3, 2}, {"1..", ".*1", ".1."}},
        {{3, 1, 2}, {"*1.", "*.1", "1.."}},
        {{3, 2, 1}, {"**1", ".1.", "1.."}},
    };
    check_patterns(c, &nc, expected);
  }
  {
    NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {0, 1}));  // c = s1 s2
    std::map<IVec, Pat> expected = {
        {{1, 2, 3}, {"1..", ".1.", "..1"}},
        {{2, 1, 3}, {"*1.", "1..", "..1"}},
        {{1, 3, 2}, {"1..", ".*1", ".1."}},
        {{2, 3, 1}, {"**1", "1..", ".1."}},
        {{3, 2, 1}, {"*.1", "*1.", "1.."}},
    };
    check_patterns(c, &nc, expected);
  }
}

TEST_CASE("type A NC patterns for S4, c = s3 s2 s1 = 4123") {
  Ctx c(GroupType::A, 3);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {2, 1, 0}));
  std::map<IVec, Pat> expected = {
      {{1, 2, 3, 4}, {"1...", ".1..", "..1.", "...1"}},
      {{2, 1, 3, 4}, {"*1..", "1...", "..1.", "...1"}},
      {{1, 3, 2, 4}, {"1...", ".*1.", ".1..", "...1"}},
      {{1, 2, 4, 3}, {"1...", ".1..", "..*1", "..1."}},
      {{3, 1, 2, 4}, {"*1..", "*.1.", "1...", "...1"}},
      {{1, 4, 2, 3}, {"1...", ".*1.", ".*.1", ".1.."}},
      {{2, 1, 4, 3}, {"*1..", "1...", "..*1", "..1."}},
      {{3, 2, 1, 4}, {"**1.", ".1..", "1...", "...1"}},
      {{1, 4, 3, 2}, {"1...", ".**1", "..1.", ".1.."}},
      {{4, 1, 2, 3}, {"*1..", "*.1.", "*..1", "1..."}},
      {{4, 2, 1, 3}, {"**1.", ".1..", "*..1", "1..."}},
      {{4, 1, 3, 2}, {"*1..", "*.*1", "..1.", "1..."}},
      {{4, 2, 3, 1}, {"***1", ".1..", "..1.", "1..."}},
      {{4, 3, 2, 1}, {"**.1", ".*1.", ".1..", "1..."}},
  };
  CHECK(nc.catalan() == 14);
  check_patterns(c, &nc, expected);
}

TEST_CASE("type A NC patterns for S4, c = s2 s1 s3 = 3142") {
  Ctx c(GroupType::A, 3);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {1, 0, 2}));
  std::map<IVec, Pat> expected = {
      {{1, 2, 3, 4}, {"1...", ".1..", "..1.", "...1"}},
      {{2, 1, 3, 4}, {"*1..", "1...", "..1.", "...1"}},
      {{1, 3, 2, 4}, {"1...", ".*1.", ".1..", "...1"}},
      {{1, 2, 4, 3}, {"1...", ".1..", "..*1", "..1."}},
      {{3, 1, 2, 4}, {"*1..", "*.1.", "1...", "...1"}},
      {{1, 4, 3, 2}, {"1...", ".*.1", ".*1.", ".1.."}},
      {{2, 1, 4, 3}, {"*1..", "1...", "..*1", "..1."}},
      {{3, 2, 1, 4}, {"**1.", ".1..", "1...", "...1"}},
      {{1, 3, 4, 2}, {"1...", ".**1", ".1..", "..1."}},
      {{4, 1, 3, 2}, {"*1..", "*..1", "*.1.", "1..."}},
      {{4, 2, 3, 1}, {"**.1", ".1..", "*.1.", "1..."}},
      {{3, 1, 4, 2}, {"*1..", "*.*1", "1...", "..1."}},
      {{3, 2, 4, 1}, {"***1", ".1..", "1...", "..1."}},
      {{3, 4, 1, 2}, {"**1.", ".*.1", "1...", ".1.."}},
  };
  check_patterns(c, &nc, expected);
}

TEST_CASE("type B2 full Schubert patterns") {
  Ctx c(GroupType::B, 2);
  std::map<IVec, Pat> expected = {
      {{1, 2}, {"1.", ".1", "..", "..", ".."}},
      {{-1, 2}, {"1.", ".x", ".*", ".1", ".."}},
      {{2, 1}, {"*1", "1.", "..", "..", ".."}},
      {{2, -1}, {"*1", "x.", "*.", "1.", ".."}},
      {{-2, 1}, {"*x", "1.", ".*", ".x", ".1"}},
      {{1, -2}, {"xx", "*1", "*.", "*.", "1."}},
      {{-2, -1}, {"*x", "xx", "**", "1.", ".1"}},
      {{-1, -2}, {"xx", "*x", "**", "*1", "1."}},
  };
  check_patterns(c, nullptr, expected);
}

TEST_CASE("type B2 NC patterns for c = s1 s0") {
  Ctx c(GroupType::B, 2);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {1, 0}));
  std::map<IVec, Pat> expected = {
      {{1, 2}, {"1.", ".1", "..", "..", ".."}},
      {{-1, 2}, {"1.", ".x", ".*", ".1", ".."}},
      {{2, 1}, {"*1", "1.", "..", "..", ".."}},
      {{-2, 1}, {"*x", "1.", ".*", ".x", ".1"}},
      {{1, -2}, {"xx", "*1", "*.", "..", "1."}},
      {{-2, -1}, {"*x", "xx", "*.", "1.", ".1"}},
  };
  CHECK(nc.catalan() == 6);
  check_patterns(c, &nc, expected);
  for (const auto& [ol, pat] : expected) {
    int u = c.w.index_of(c.rs.from_one_line(ol));
    CHECK(nc_cell_chart(c.w, nc, u).star_count() == (int)nc.inv_nc(u).size());
  }
}

TEST_CASE("all 20 B3 NC patterns for c = s2 s1 s0 match the appendix") {
  Ctx c(GroupType::B, 3);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {2, 1, 0}));
  REQUIRE(nc.catalan() == 20);
  std::map<IVec, Pat> expected = {
      {{1, 2, 3}, {"1..", ".1.", "..1", "...", "...", "...", "..."}},
      {{2, 1, 3}, {"1..", ".*1", ".1.", "...", "...", "...", "..."}},
      {{1, 3, 2}, {"*1.", "1..", "..1", "...", "...", "...", "..."}},
      {{3, 2, 1}, {"*.1", "*1.", "1..", "...", "...", "...", "..."}},
      {{-1, 2, 3}, {"1..", ".1.", "..x", "..*", "..1", "...", "..."}},
      {{1, -2, 3}, {"1..", ".xx", ".*1", ".*.", "...", ".1.", "..."}},
      // appendix blanks the two forced entries that vanish after the cut
      {{1, 2, -3}, {"xxx", "*1.", "*.1", "*..", "...", "...", "1.."}},
      {{-2, -1, 3}, {"1..", ".*x", ".xx", ".*.", ".1.", "..1", "..."}},
      // appendix figure omits the (3,0) star; the cell is 3-dimensional
      {{1, -3, -2}, {"*xx", "xxx", ".*1", "*..", "...", "1..", ".1."}},
      {{-3, 2, -1}, {"*.x", "*1.", "x.x", "*..", "1..", "..x", "..1"}},
      {{-3, 1, -2}, {"*.x", "xxx", ".1.", "*..", "*.x", "1..", "..1"}},
      {{3, 1, 2}, {"**1", "1..", ".1.", "...", "...", "...", "..."}},
      {{-3, -1, 2}, {"**x", "1..", ".xx", ".*.", ".1.", "..x", "..1"}},
      {{-1, 3, 2}, {"*1.", "1..", "..x", "..*", "..1", "...", "..."}},
      {{-3, -2, -1}, {"*.x", "*xx", "xxx", ".*.", "1..", ".1.", "..1"}},
      // appendix draws a fourth star, which would exceed the cell dimension
      {{2, 1, -3}, {"xxx", "**1", ".1.", "*..", "...", "...", "1.."}},
      {{1, -3, 2}, {"*xx", "1..", ".*1", ".*.", "...", ".x.", ".1."}},
      {{-3, 2, 1}, {"*.x", "*1.", "1..", "..*", "..x", "..x", "..1"}},
      {{-2, 1, 3}, {"1..", ".*x", ".1.", "..*", "..x", "..1", "..."}},
      {{-3, 1, 2}, {"**x", "1..", ".1.", "..*", "..x", "..x", "..1"}},
  };
  REQUIRE(expected.size() == 20);
  check_patterns(c, &nc, expected);
}

TEST_CASE("type C2 patterns: full and NC") {
  Ctx c(GroupType::C, 2);
  std::map<IVec, Pat> full = {
      {{1, 2}, {"1.", ".1", "..", ".."}},   {{-1, 2}, {"1.", ".*", ".1", ".."}},
      {{2, 1}, {"*1", "1.", "..", ".."}},   {{2, -1}, {"*1", "*.", "1.", ".."}},
      {{-2, 1}, {"**", "1.", ".x", ".1"}},  {{1, -2}, {"*x", "*1", "*.", "1."}},
      {{-2, -1}, {"**", "*x", "1.", ".1"}}, // appendix swaps the star and forced entry in rows 1-2; only this
      // placement solves polynomially (d = b - ce vs e = (b-d)/c)
      {{-1, -2}, {"*x", "**", "*1", "1."}},
  };
  check_patterns(c, nullptr, full);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {1, 0}));
  std::map<IVec, Pat> expected = {
      {{1, 2}, {"1.", ".1", "..", ".."}},  {{-1, 2}, {"1.", ".*", ".1", ".."}},
      {{2, 1}, {"*1", "1.", "..", ".."}},  {{-2, 1}, {"**", "1.", ".x", ".1"}},
      {{1, -2}, {"*x", "*1", "..", "1."}}, {{-2, -1}, {"*.", "*x", "1.", ".1"}},
  };
  check_patterns(c, &nc, expected);
}

TEST_CASE("type D2 NC patterns") {
  Ctx c(GroupType::D, 2);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {1, 0}));
  std::map<IVec, Pat> expected = {
      {{1, 2}, {"1.", ".1", "..", ".."}},
      {{2, 1}, {"*1", "1.", "..", ".."}},
      {{-2, -1}, {"*x", "xx", "1.", ".1"}},
      {{-1, -2}, {"xx", "*x", "*1", "1."}},
  };
  CHECK(nc.catalan() == 4);
  check_patterns(c, &nc, expected);
}

TEST_CASE("type D3 NC patterns for c = s2 s1 s1hat") {
  Ctx c(GroupType::D, 3);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {2, 1, 0}));
  REQUIRE(nc.catalan() == 14);
  std::map<IVec, Pat> expected = {
      {{1, 2, 3}, {"1..", ".1.", "..1", "...", "...", "..."}},
      {{2, 1, 3}, {"1..", ".*1", ".1.", "...", "...", "..."}},
      {{1, 3, 2}, {"*1.", "1..", "..1", "...", "...", "..."}},
      {{3, 2, 1}, {"*.1", "*1.", "1..", "...", "...", "..."}},
      {{-2, -1, 3}, {"1..", ".*x", ".xx", ".1.", "..1", "..."}},
      {{1, -3, -2}, {"*xx", "xxx", "*.1", "*..", "1..", ".1."}},
      // the appendix marks (4,2) free, but it sits weakly right of the
      // column-1 mirror and |Inv_NC| = 2 forces it
      {{-3, 2, -1}, {"*.x", "*1.", "x.x", "1..", "..x", "..1"}},
      {{-3, -1, 2}, {"**x", "1..", ".xx", ".1.", "..x", "..1"}},
      {{-1, 2, -3}, {"xxx", "*1.", "*.x", "*.1", "...", "1.."}},
      {{2, -3, -1}, {"*xx", "**1", "xx.", "1..", "...", ".1."}},
      {{3, 1, 2}, {"**1", "1..", ".1.", "...", "...", "..."}},
      {{-1, -2, 3}, {"1..", ".xx", ".*x", ".*1", ".1.", "..."}},
      {{-2, -3, 1}, {"*xx", "**x", "1..", ".xx", "..1", ".1."}},
      {{-1, -3, 2}, {"*xx", "1..", ".*x", ".*1", ".x.", ".1."}},
  };
  REQUIRE(expected.size() == 14);
  check_patterns(c, &nc, expected);
}

TEST_CASE("GL3 Pluecker tuple on the big cell (consistent signs)") {
  Ctx c(GroupType::A, 2);
  int u = c.w.index_of(c.rs.from_one_line({3, 2, 1}));
  ChartPattern pat = schubert_chart(c.w, u);
  REQUIRE(pat.stars == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}});
  uint32_t p = 10007;
  std::mt19937_64 rng(5);
  std::map<IVec, int> sign;
  for (int trial = 0; trial < 20; ++trial) {
    FiniteFieldPoint pt;
    pt.prime = p;
    uint64_t pc = rng() % p, pa = rng() % p, pb = rng() % p;
    pt.mat = {{(uint32_t)pc, (uint32_t)pa, 1}, {(uint32_t)pb, 1, 0}, {1, 0, 0}};
    auto md = [&](long long v) {
      long long m = (long long)p;
      return (uint32_t)(((v % m) + m) % m);
    };
    long long cab = md((long long)pc - (long long)(pa * pb % p));
    std::map<IVec, uint32_t> expect = {
        {{1, 2, 3}, md((long long)(pc % p) * cab)},
        {{2, 1, 3}, md((long long)(pb % p) * cab)},
        {{1, 3, 2}, md(-(long long)(pa * pc % p))},
        {{2, 3, 1}, md(-(long long)pb)},
        {{3, 1, 2}, md(-(long long)pa)},
        {{3, 2, 1}, md(-1)},
    };
    for (auto& [ol, val] : expect) {
      uint32_t got = plucker_coordinate(c.w, pt, c.w.index_of(c.rs.from_one_line(ol)));
      uint32_t neg = val == 0 ? 0 : (uint32_t)(p - val);
      if (!sign.count(ol)) {
        if (got == val)
          sign[ol] = 1;
        else if (got == neg)
          sign[ol] = -1;
        else
          FAIL("tuple mismatch");
      } else {
        CHECK(got == (sign[ol] == 1 ? val : neg));
      }
    }
  }
}

TEST_CASE("GL4 big-cell Pluecker entries b(ad-b) and e(df-e)") {
  Ctx c(GroupType::A, 3);
  int u = c.w.w0();
  ChartPattern pat = schubert_chart(c.w, u);
  REQUIRE(pat.star_count() == 6);
  uint32_t p = 10007;
  std::mt19937_64 rng(7);
  int sign13 = 0, sign24 = 0;
  for (int trial = 0; trial < 20; ++trial) {
    uint64_t vc = rng() % p, vb = rng() % p, va = rng() % p;
    uint64_t ve = rng() % p, vd = rng() % p, vf = rng() % p;
    FiniteFieldPoint pt;
    pt.prime = p;
    pt.mat = {{(uint32_t)vc, (uint32_t)vb, (uint32_t)va, 1},
              {(uint32_t)ve, (uint32_t)vd, 1, 0},
              {(uint32_t)vf, 1, 0, 0},
              {1, 0, 0, 0}};
    auto md = [&](long long v) {
      long long m = (long long)p;
      return (uint32_t)(((v % m) + m) % m);
    };
    uint32_t expect13 = md((long long)vb * md((long long)(va * vd % p) - (long long)vb));
    uint32_t expect24 = md((long long)ve * md((long long)(vd * vf % p) - (long long)ve));
    uint32_t got13 = plucker_coordinate(c.w, pt, c.w.index_of(c.rs.from_one_line({4, 1, 2, 3})));
    uint32_t got24 = plucker_coordinate(c.w, pt, c.w.index_of(c.rs.from_one_line({2, 3, 4, 1})));
    auto fix_sign = [&](int& sgn, uint32_t got, uint32_t val) {
      uint32_t neg = val == 0 ? 0 : (uint32_t)(p - val);
      if (sgn == 0) {
        if (got == val)
          sgn = 1;
        else if (got == neg)
          sgn = -1;
        else
          FAIL("entry mismatch");
      } else {
        CHECK(got == (sgn == 1 ? val : neg));
      }
    };
    fix_sign(sign13, got13, expect13);
    fix_sign(sign24, got24, expect24);
  }
}

TEST_CASE("B2 cross solving matches the isotropy formula") {
  Ctx c(GroupType::B, 2);
  int u = c.w.index_of(c.rs.from_one_line({2, -1}));
  ChartPattern pat = schubert_chart(c.w, u);
  uint32_t p = 101;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    FiniteFieldPoint pt = sample_point(c.w, pat, p, rng);
    // column 0 = (a, x, b, 1, 0): self-isotropy b^2 + 2x = 0
    uint64_t b = pt.mat[2][0], x = pt.mat[1][0];
    CHECK((b * b + 2 * x) % p == 0);
  }
}

TEST_CASE("every B3, C3, D3 NC chart solves uniquely") {
  for (auto t : {GroupType::B, GroupType::C, GroupType::D}) {
    Ctx c(t, 3);
    NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {2, 1, 0}));
    for (int u : nc.elements) {
      ChartPattern pat = nc_cell_chart(c.w, nc, u);
      std::mt19937_64 rng(17);
      for (int trial = 0; trial < 50; ++trial) CHECK_NOTHROW(sample_point(c.w, pat, 10007, rng));
    }
  }
}

TEST_CASE("Pluecker vanishing sweeps (small trial counts)") {
  struct Case {
    GroupType t;
    int n;
    std::vector<int> word;
  };
  std::vector<Case> cases = {{GroupType::A, 3, {2, 1, 0}},
                             {GroupType::B, 2, {1, 0}},
                             {GroupType::B, 2, {0, 1}},
                             {GroupType::C, 2, {1, 0}},
                             {GroupType::D, 3, {2, 1, 0}}};
  for (const auto& cs : cases) {
    Ctx c(cs.t, cs.n);
    NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, cs.word));
    PluckerReport rep = verify_plucker_vanishing(c.w, nc, 10007, 25, 42);
    CHECK(rep.deterministic_failures == 0);
    CHECK(rep.fixed_point_check);
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("type A: pattern and root-group product give the same cells") {
  Ctx c(GroupType::A, 3);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {2, 1, 0}));
  uint32_t p = 10007;
  std::mt19937_64 rng(23);
  for (int u : nc.elements) {
    ChartPattern full = schubert_chart(c.w, u);
    for (int trial = 0; trial < 5; ++trial) {
      FiniteFieldPoint pt = sample_product_point(c.w, u, c.w.inversions(u), p, rng);
      CHECK(reduce_to_pattern(full, pt));
    }
    ChartPattern cell = nc_cell_chart(c.w, nc, u);
    for (int trial = 0; trial < 5; ++trial) {
      FiniteFieldPoint pt = sample_product_point(c.w, u, nc.inv_nc(u), p, rng);
      CHECK(reduce_to_pattern(cell, pt));
    }
  }
}

TEST_CASE("chart error paths") {
  Ctx c(GroupType::B, 2);
  NcLattice nc = build_nc(c.w, coxeter_from_word(c.w, {0, 1}));
  int outside = -1;
  for (int i = 0; i < c.w.size(); ++i)
    if (!nc.contains(i)) { outside = i; break; }
  REQUIRE(outside >= 0);
  CHECK_THROWS_AS(nc_cell_chart(c.w, nc, outside), coxcat_error);
  ChartPattern pat = schubert_chart(c.w, c.w.w0());
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(sample_point(c.w, pat, 10006, rng), coxcat_error);
  CHECK_THROWS_AS(sample_point(c.w, pat, 7, rng), coxcat_error);
  CHECK(is_prime_u32(10007));
  CHECK_FALSE(is_prime_u32(10006));
}
