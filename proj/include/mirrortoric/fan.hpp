#pragma once

#include "mirrortoric/polytope.hpp"

#include <optional>

namespace mirrortoric {

/// Rational polyhedral cone, possibly with lineality. Stores both the
/// generator form (canonical extreme rays + lineality basis) and the facet
/// form; containment tests use the facet form.
struct Cone {
  int ambient = 0;
  std::vector<VecZ> rays;       // primitive extreme rays, lex-sorted
  std::vector<VecZ> lineality;  // canonical basis, empty for strictly convex cones
  std::vector<VecZ> ineqs;      // <a,x> >= 0
  std::vector<VecZ> eqs;        // <a,x> = 0 (span equations)
  int dim = 0;

  static Cone from_generators(std::vector<VecZ> rays, std::vector<VecZ> lins, int ambient);
  static Cone from_hform(std::vector<VecZ> ineqs, std::vector<VecZ> eqs, int ambient);
  /// Cone over a polytope face, based at the origin.
  static Cone over(const Polytope& P, const Face& f);

  bool contains(const VecQ& x) const;
  bool contains(const VecZ& x) const { return contains(to_q(x)); }
  bool contains(const Cone& other) const;
  bool is_zero() const { return rays.empty() && lineality.empty(); }
  bool is_pointed() const { return lineality.empty(); }
  bool simplicial() const { return lineality.empty() && static_cast<int>(rays.size()) == dim; }
  /// All generators (rays plus +-lineality), enough to test linear conditions.
  std::vector<VecZ> generators_signed() const;
  /// A relative-interior point (sum of rays; the origin for the zero cone).
  VecQ rel_interior_point() const;
  std::string key() const;  // canonical identity string
};

bool operator==(const Cone& a, const Cone& b);

std::vector<Cone> cone_faces(const Cone& C);
Cone cone_intersect(const Cone& a, const Cone& b);
bool is_face_of(const Cone& face, const Cone& C);
Cone cone_image(const Cone& C, const MatZ& A);

/// Finite collection of cones closed under taking faces.
struct Fan {
  int ambient = 0;
  std::vector<Cone> cones;  // deduped, sorted by (dim, rays, lineality)

  std::vector<int> maximal_indices() const;
  bool has_cone(const Cone& c) const;
};

/// Builds the closure under faces of the given cones and dedupes.
Fan fan_from_cones(int ambient, const std::vector<Cone>& cones);

/// Fan of cones over the proper faces of P (origin must be interior),
/// plus the zero cone.
Fan fan_over_faces(const Polytope& P);

/// Subfan of cones of dimension <= k.
Fan skeleton(const Fan& F, int k);

/// Removes the listed cones, which must all be maximal in F.
Fan remove_cones(const Fan& F, const std::vector<Cone>& S);

struct FanMapFailure {
  Cone source;
  Cone image;
};
struct FanMapCheck {
  bool ok = false;
  std::vector<FanMapFailure> failures;
};
/// True iff A maps every cone of F1 into a single cone of F2.
FanMapCheck is_fan_map(const MatZ& A, const Fan& F1, const Fan& F2);

std::optional<Cone> smallest_containing_cone(const Fan& F, const VecQ& x);

/// Common refinement: pairwise intersections, restricted to the
/// intersection of the supports.
Fan refine(const Fan& F1, const Fan& F2);

/// Constructive fan validity: every pairwise intersection is a face of both.
bool fan_is_valid(const Fan& F);

nlohmann::json fan_to_json(const Fan& F);
Fan fan_from_json(const nlohmann::json& j);

}  // namespace mirrortoric
