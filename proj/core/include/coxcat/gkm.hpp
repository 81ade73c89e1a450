// Graph cohomology over Z[t_alpha : alpha in Delta] for the reflection Cayley
// graph and its induced subgraph on NC(W,c): GKM classes, Schubert classes by
// divided differences, localization integrals over the toric pieces of the
// paving, the flowup and duality (Coxeter Schubert) bases, Betti numbers, the
// isomorphisms Psi_{c,w}, and the experimental restriction/structure
// coefficients.
//
// Variable t_i corresponds to the simple root alpha_i; for a root
// beta = sum c_i alpha_i the associated linear form is t_beta = sum c_i t_i,
// and t_{-beta} = -t_beta.
#pragma once

#include "coxcat/intpoly.hpp"
#include "coxcat/polytope.hpp"

namespace coxcat {

struct GkmGraph {
  const WeylGroup* group = nullptr;
  std::vector<int> vertices;   // group indices
  std::vector<int> position;   // group index -> slot, -1 if absent
  struct Edge {
    int a, b;        // slots
    int label_root;  // positive-root index
  };
  std::vector<Edge> edges;

  int slot(int group_elem) const;
};

GkmGraph cayley_graph(const WeylGroup& w);
GkmGraph nc_cayley_graph(const NcLattice& nc);  // equals the Kreweras Hasse diagram

struct GkmClass {
  std::vector<IntPoly> values;  // parallel to graph.vertices

  bool operator==(const GkmClass& o) const { return values == o.values; }
};

// Edge divisibility test; on failure *why names the offending edge.
bool is_gkm_class(const RootSystem& rs, const GkmGraph& g, const GkmClass& f,
                  std::string* why = nullptr);

GkmClass gkm_add(const GkmClass& a, const GkmClass& b);
GkmClass gkm_mul(const GkmClass& a, const GkmClass& b);
GkmClass gkm_scale(const IntPoly& c, const GkmClass& a);
GkmClass gkm_constant(const GkmGraph& g, int nvars, const Int& c);

// Equivariant Schubert classes on Cay(W,T), indexed by group element: seeded
// at w0 by prod_{alpha in Phi+} t_alpha and propagated by divided differences
// (d_i f)_v = (f_{v s_i} - f_v) / t_{v(alpha_i)}.
std::vector<GkmClass> schubert_classes(const WeylGroup& w);

// Localization coefficient of a vertex on a toric piece: the cone at the
// vertex is decomposed into simplicial cones via an apex triangulation and
// each contributes 1/(mult * prod t_ray) with primitive ray generators
// pointing into the polytope.
RationalFn equivariant_multiplicity(const WeylGroup& w, const LatticePolytope& p,
                                    int vertex_index);

// The NC cohomology package: pieces, localization matrix, flowup basis,
// duality (Coxeter Schubert) basis.
class NcCohomology {
 public:
  NcCohomology(const Cambrian& cam, const QVec& lambda);

  const WeylGroup& group() const { return *w_; }
  const NcLattice& nc() const { return nc_; }
  const GkmGraph& graph() const { return graph_; }
  // slots are ordered by a linear extension of Bruhat order on NC
  const std::vector<GkmClass>& flowup_basis() const { return flowup_; }
  const std::vector<GkmClass>& duality_basis() const { return duality_; }
  const LatticePolytope& piece(int slot) const { return pieces_[slot]; }

  RationalFn integrate(int slot, const GkmClass& f) const;  // over Y_{u_slot}
  std::vector<int> betti() const;  // histogram of |Clust+(u)|, degree-checked

  // expansion of a class in the duality basis; exact polynomial coefficients
  std::vector<IntPoly> expand_in_duality(const GkmClass& f) const;
  // restriction of a full Schubert class to the NC vertices
  GkmClass restrict_class(const std::vector<GkmClass>& schubert, int welem) const;

 private:
  const WeylGroup* w_;
  NcLattice nc_;
  GkmGraph graph_;
  QVec lambda_;
  std::vector<LatticePolytope> pieces_;
  std::vector<std::vector<RationalFn>> emult_;  // emult_[j][i]: vertex u_i on Y_j
  std::vector<GkmClass> flowup_;
  std::vector<GkmClass> duality_;

  void build_pieces(const Cambrian& cam);
  void build_flowup();
  void build_duality();
};

// Betti numbers of the full flag variety (lengths histogram), for contrast.
std::vector<int> flag_betti(const WeylGroup& w);

// Psi_{c,w}: classes on NC(W,c) -> classes on NC(W,c') for c' = w c w^{-1},
// (f_u) -> (w . f_{w^{-1} v w})_v with w acting on variables by t_beta ->
// t_{w(beta)}.  Throws unless c' is again a Coxeter element.
GkmClass psi_apply(const NcLattice& src, const GkmGraph& src_graph, const NcLattice& dst,
                   const GkmGraph& dst_graph, int w_elem, const GkmClass& f);

}  // namespace coxcat
