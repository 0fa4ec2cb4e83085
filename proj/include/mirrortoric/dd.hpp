#pragma once

#include "mirrortoric/numeric.hpp"

namespace mirrortoric {

/// Generator description of a polyhedral cone: nonnegative span of `rays`
/// plus the linear span of `lineality`.
struct VForm {
  std::vector<VecZ> rays;       // primitive, lex-sorted
  std::vector<VecZ> lineality;  // canonical basis of the lineality space
};

/// Extreme rays and lineality of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}.
///
/// Double-description with a simplex seed and the combinatorial adjacency
/// test; exact over Z throughout. Intended for the dimensions this library
/// works in (<= 8).
VForm dual_description(const std::vector<VecZ>& ineqs, const std::vector<VecZ>& eqs, int n);

/// Canonical basis for the span of the given vectors: reduced rows, cleared
/// to primitive integer vectors, sorted. Span equality <=> equal output.
std::vector<VecZ> span_basis(const std::vector<VecZ>& gens, int n);

}  // namespace mirrortoric
