#pragma once

#include "mirrortoric/dd.hpp"
#include "mirrortoric/numeric.hpp"

#include <optional>

#include "json.hpp"

namespace mirrortoric {

/// Facet inequality <normal, x> >= -offset. Normal and offset are integral
/// and jointly primitive.
struct FacetIneq {
  VecZ normal;
  Int offset;
};

/// Affine-hull equation <normal, x> = value.
struct HullEq {
  VecZ normal;
  Int value;
};

/// A face, recorded as indices into the parent polytope's vertex list.
struct Face {
  std::vector<int> vertex_indices;  // sorted
  int dim = -1;
  bool operator==(const Face& o) const { return vertex_indices == o.vertex_indices; }
  bool operator<(const Face& o) const { return vertex_indices < o.vertex_indices; }
};

/// Compact convex polytope with exact rational vertices and a facet system.
/// Vertices are exactly the extreme points; lower-dimensional polytopes carry
/// their affine hull as explicit equations.
struct Polytope {
  int ambient = 0;
  std::vector<VecQ> vertices;  // extreme points, lex-sorted
  std::vector<FacetIneq> facets;
  std::vector<HullEq> hull_eqs;  // empty iff full-dimensional
  int dim = -1;

  bool contains(const VecQ& x) const;
  bool contains(const VecZ& x) const { return contains(to_q(x)); }
  bool contains_rel_interior(const VecQ& x) const;
  bool is_lattice() const;
  std::vector<VecZ> lattice_vertices() const;  // throws unless is_lattice()
};

Polytope hull(const std::vector<VecQ>& points, int ambient);
Polytope hull_z(const std::vector<VecZ>& points, int ambient);

/// {u : <p,u> >= -1 for all p in P}. Requires the origin interior to P.
Polytope dual(const Polytope& P);

/// All k-dimensional faces, ordered lexicographically by sorted vertex-index set.
/// k == dim(P) yields the improper face (P itself).
std::vector<Face> faces(const Polytope& P, int k);
/// Every face of every dimension, including P itself.
std::vector<Face> all_faces(const Polytope& P);

std::vector<VecZ> lattice_points(const Polytope& P);
std::vector<VecZ> lattice_points_serial(const Polytope& P);

Polytope minkowski(const Polytope& P, const Polytope& Q);
Polytope image(const Polytope& P, const MatZ& A);
Polytope translate(const Polytope& P, const VecQ& t);
Polytope dilate(const Polytope& P, const Rat& factor);

/// The unique minimal face whose relative interior contains x, or nullopt if
/// x lies outside P.
std::optional<Face> locate(const Polytope& P, const VecQ& x);

bool is_reflexive(const Polytope& P);

/// Vertex set equality (both canonical, so this is plain comparison).
bool same_polytope(const Polytope& P, const Polytope& Q);

Polytope face_polytope(const Polytope& P, const Face& f);

nlohmann::json polytope_to_json(const Polytope& P);
Polytope polytope_from_json(const nlohmann::json& j);

}  // namespace mirrortoric
