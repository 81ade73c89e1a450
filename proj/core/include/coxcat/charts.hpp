// Explicit matrix models of Schubert and Coxeter Schubert cells for the
// classical groups, Pluecker coordinates as minor products, and finite-field
// verification of the Pluecker-vanishing description of the Coxeter flag
// variety.
//
// Matrix conventions per type (rows are coordinate labels):
//   A_n : (n+1) x (n+1) over row labels 1..n+1; full permutation pattern.
//   B_n : (2n+1) x n, rows -n..-1,0,1..n, symmetric form x_0^2 + sum x_i x_{-i}.
//   C_n : 2n x n, rows -n..-1,1..n, symplectic form sum dx_i wedge dx_{-i}.
//   D_n : 2n x n, rows -n..-1,1..n, symmetric form sum x_i x_{-i}.
// Patterns use 0/1/*/x cells where * is a free variable and x (the appendix's
// "otimes") is forced by isotropy against earlier columns (and the column
// itself in B/D).
#pragma once

#include "coxcat/catalan.hpp"

#include <random>

namespace coxcat {

enum class CellSym : uint8_t { Zero, One, Star, Cross };

struct ChartPattern {
  GroupType type = GroupType::A;
  int rank = 0;
  int rows = 0, cols = 0;
  int welem = -1;  // group index of the indexing element
  std::vector<std::vector<CellSym>> shape;
  std::vector<std::pair<int, int>> stars;  // row-major positions of Star cells

  int star_count() const { return (int)stars.size(); }
};

ChartPattern schubert_chart(const WeylGroup& w, int welem);
// Schubert pattern with the stars indexed by Inv(u) \ Inv_NC(u) set to zero.
ChartPattern nc_cell_chart(const WeylGroup& w, const NcLattice& nc, int u);

// Appendix-style rendering: one string per row over {., 1, *, x}.
std::vector<std::string> render_pattern(const ChartPattern& p);

// The left reflection attached to a star cell (the root-group position whose
// parameter it carries); used to cut Schubert patterns down to NC patterns.
int star_reflection_root(const WeylGroup& w, const ChartPattern& p, int row, int col);

struct FiniteFieldPoint {
  uint32_t prime = 0;
  std::vector<std::vector<uint32_t>> mat;  // rows x cols
};

bool is_prime_u32(uint32_t p);

// Fills stars uniformly and solves the crosses column by column from the
// isotropy constraints; throws if the cross system is not uniquely
// triangular-solvable or if isotropy cannot be satisfied.
FiniteFieldPoint sample_point(const WeylGroup& w, const ChartPattern& p, uint32_t prime,
                              std::mt19937_64& rng);

// Pl_w(point) for a single group element, by the type's minor-product formula
// (rows sorted ascending; vanishing behavior is convention-independent).
uint32_t plucker_coordinate(const WeylGroup& w, const FiniteFieldPoint& pt, int welem);
// all coordinates, indexed by group element
std::vector<uint32_t> plucker_vector(const WeylGroup& w, const FiniteFieldPoint& pt);

struct PluckerReport {
  int cells = 0;
  long long samples = 0;
  long long deterministic_failures = 0;  // Pl_w != 0 outside NC, or tau-u cuts
  long long top_nonzero = 0;             // samples with Pl_u != 0
  long long spurious_vanishing = 0;      // NC coordinates that happened to vanish
  bool fixed_point_check = true;         // stars-at-zero coset behavior
  std::vector<std::string> failures;

  bool ok(double top_threshold = 0.99) const {
    return deterministic_failures == 0 && fixed_point_check &&
           (samples == 0 || (double)top_nonzero >= top_threshold * (double)samples);
  }
};

// For every u in NC and `trials` samples of its cell chart: Pl_w = 0 for all
// w outside NC (hard), Pl_{tau u} = 0 for tau in Inv(u) \ Inv_NC(u) (hard),
// and Pl_u != 0 in at least 99% of samples.  Deterministic per-cell/-trial
// RNG streams derived from the seed.
PluckerReport verify_plucker_vanishing(const WeylGroup& w, const NcLattice& nc, uint32_t prime,
                                       int trials, uint64_t seed);

// Type A only: sample the root-group product parametrization
// e_{b_1}(a_1)...e_{b_k}(a_k) w of the cell with the given inversion roots,
// then column-reduce to the flag normal form; the reduced matrix must match
// the pattern cell-for-cell (zeros included).
FiniteFieldPoint sample_product_point(const WeylGroup& w, int welem,
                                      const std::vector<int>& inversion_roots, uint32_t prime,
                                      std::mt19937_64& rng);
bool reduce_to_pattern(const ChartPattern& p, FiniteFieldPoint& pt);

}  // namespace coxcat
