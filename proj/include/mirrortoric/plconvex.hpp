#pragma once

#include "mirrortoric/fan.hpp"

#include <map>
#include <memory>

namespace mirrortoric {

struct LinearityFan {
  Fan fan;
  std::vector<std::pair<Cone, VecQ>> maximal;  // maximal cone with its covector
};

/// Lower convex piecewise-linear function, globally defined and positively
/// homogeneous. Stored either as its Newton polytope or lazily as a pullback
/// or sum, so the Newton-polytope laws stay checkable against independent
/// computation routes.
class PLConvexFunction {
 public:
  static PLConvexFunction from_polytope(const Polytope& Q);
  /// The PL function linear on each maximal cone of F with the given ray
  /// values. Certifies lower convexity exactly and rejects values that fail.
  static PLConvexFunction from_ray_values(const Fan& F, const std::map<VecZ, Rat>& values);
  static PLConvexFunction zero(int dim);

  int domain_dim() const;
  Rat operator()(const VecQ& v) const;
  Rat operator()(const VecZ& v) const { return (*this)(to_q(v)); }

  /// Newton polytope. Stored form for polytope-backed functions; derived
  /// forms go through the linearity-fan route.
  Polytope newton() const;
  /// Newton polytope recomputed from evaluations regardless of representation.
  Polytope newton_recomputed() const;

  LinearityFan linearity_fan() const;

  friend PLConvexFunction pullback(const PLConvexFunction& f, const MatZ& p);
  friend PLConvexFunction add(const PLConvexFunction& f, const PLConvexFunction& g);

  struct Node;  // implementation detail, defined in the .cpp

 private:
  std::shared_ptr<const Node> node_;
};

PLConvexFunction pullback(const PLConvexFunction& f, const MatZ& p);
PLConvexFunction add(const PLConvexFunction& f, const PLConvexFunction& g);

/// Gauge of a reflexive-style body: 1 on the boundary of P, 0 at the origin.
PLConvexFunction boundary_function(const Polytope& P);

/// Vanishing-order function of the monomial section at lattice point m of Q:
/// Newton polytope Q - m, nonnegative everywhere.
PLConvexFunction section_function(const Polytope& Q, const VecZ& m);

enum class ConvexityStatus { strictly_convex, not_piecewise_linear, not_strictly_convex };
struct StrictConvexityVerdict {
  ConvexityStatus status;
  std::string detail;
  bool ok() const { return status == ConvexityStatus::strictly_convex; }
};
/// Checks that f is linear on each maximal cone of F, that the linear parts
/// of distinct maximal cones differ, and that each linear part supports f
/// with equality exactly on its cone.
StrictConvexityVerdict is_strictly_convex_on(const PLConvexFunction& f, const Fan& F);

struct OrbitExclusion {
  bool excluded = false;
  int zero_count = 0;
  std::vector<VecZ> survivors;  // lattice points whose section stays nonzero on the orbit
};
/// Exactly-one-survivor test: the cone's torus orbit misses generic members
/// iff precisely one monomial section of Q stays nonvanishing on it.
OrbitExclusion orbit_excluded(const Cone& C, const Polytope& Q);

}  // namespace mirrortoric
