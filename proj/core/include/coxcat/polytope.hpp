// Moment polytopes of Bruhat intervals in exact rational arithmetic: convex
// hulls, face lattices, normalized volumes, the Lam--Postnikov polypositroid
// facet test, the glued moment complex of a Coxeter flag variety, and the
// permutahedron tiling check.
//
// Points live in root coordinates: the vertex for a group element w is the
// root-coordinate vector of w . lambda - lambda.  Full-dimensional volumes are
// Euclidean volumes in root coordinates, i.e. normalized to the root lattice
// up to a global n! convention shared by all polytopes being compared.
#pragma once

#include "coxcat/intervals.hpp"

namespace coxcat {

// Appendix choices of the regular dominant weight, in ambient coordinates:
// A: (n, n-1, ..., 0); B: (1, 2, ..., n); C: (1, 2, ..., n); D: (0, 1, ..., n-1).
// Custom types get any exact solution of (lambda, alpha_i^vee) = 1.
QVec default_lambda(const RootSystem& rs);
void require_regular_dominant(const RootSystem& rs, const QVec& lambda);

struct LatticePolytope {
  int nvars = 0;                    // ambient root-coordinate dimension n
  int dim = 0;                      // affine dimension
  std::vector<int> vertex_elems;    // group indices, parallel to points
  std::vector<QVec> points;         // root coordinates (w.lambda - lambda)
  std::vector<QVec> span_points;    // coordinates in a basis of the affine span

  struct Facet {
    QVec normal_span;      // covector in span coordinates: normal . x <= offset
    QVec normal_root;      // the same covector pulled back to root coordinates
    Rat offset;
    std::vector<int> tight;  // vertex indices on the facet, sorted
  };
  std::vector<Facet> facets;

  struct Face {
    std::vector<int> verts;  // vertex indices, sorted
    int dim = 0;
  };
  std::vector<Face> faces;  // all faces: vertices, ..., the polytope itself

  const QVec& point_of(int vertex_index) const { return points[vertex_index]; }
  int index_of_elem(int elem) const;
  std::vector<int> edges_at(int vertex_index) const;  // other endpoints
  bool contains(const QVec& root_point, bool strictly) const;
  QVec centroid() const;  // in root coordinates
};

// Hull of the points w . lambda - lambda over the given group elements.
LatticePolytope moment_polytope(const WeylGroup& w, const std::vector<int>& elems,
                                const QVec& lambda_ambient);

// Normalized volume (Euclidean in root coordinates); requires dim == nvars.
Rat polytope_volume(const LatticePolytope& p);

// Triangulation into dim-simplices all containing the given vertex; simplices
// are vertex-index lists with the apex last.  Used for vertex tangent-cone
// decompositions in localization.
std::vector<std::vector<int>> apex_triangulation(const LatticePolytope& p, int apex);

// Every face of a toric interval polytope is the polytope of a subinterval;
// returns the (u', v') pairs aligned with p.faces.  Throws if some face's
// vertex set is not a Bruhat interval.
std::vector<std::pair<int, int>> faces_as_subintervals(const WeylGroup& w,
                                                       const LatticePolytope& p);

// Lam--Postnikov test: every facet normal n satisfies (id - c) n parallel to
// a root.  For full-dimensional polytopes the normal is determined; for
// lower-dimensional faces the normal is free modulo the span's annihilator
// and the test asks for a compliant representative.
bool polypositroid_test(const WeylGroup& w, const LatticePolytope& p, int c_elem);

struct MomentComplex {
  struct FaceRec {
    std::vector<int> verts;  // group indices (noncrossing elements), sorted
    int dim = 0;
    std::vector<int> owners;  // indices into top_faces
  };
  std::vector<FaceRec> faces;               // deduplicated by vertex set
  std::vector<LatticePolytope> top_faces;   // the Cat+ distinct translates
  std::vector<std::vector<int>> top_members;  // w's producing each top face

  int euler_characteristic() const;
};

// Builds Comp(Cfl_c): all faces of all translated interval polytopes, glued
// along equal vertex sets.  Verifies that the 1-skeleton equals the Kreweras
// Hasse diagram and that the vertex set is NC(W,c); throws otherwise.
MomentComplex build_moment_complex(const Cambrian& cam, const QVec& lambda_ambient);

struct TilingReport {
  int pieces = 0;
  Rat total_piece_volume;
  Rat permutahedron_volume;
  bool volumes_match = false;
  bool interiors_disjoint = false;
  std::vector<std::string> failures;
};

// Sum of exact volumes of the P_{[w, wc]} against the W-permutahedron, plus
// sampled interior-disjointness.
TilingReport hhmp_tiling_check(const WeylGroup& w, const CoxeterElement& c,
                               const QVec& lambda_ambient, int samples_per_piece = 8,
                               uint64_t seed = 42);

}  // namespace coxcat
