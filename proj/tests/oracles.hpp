// Test-only oracles, kept independent of the library's computation paths.
#pragma once

#include "mirrortoric/numeric.hpp"
#include "mirrortoric/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace oracle {

using namespace mirrortoric;

// Fraction-free Gaussian elimination rank, written separately from the
// library's elimination code.
inline int bareiss_rank(std::vector<VecZ> rows, int n) {
  Int prev = 1;
  int rk = 0, lead = 0;
  while (rk < static_cast<int>(rows.size()) && lead < n) {
    int piv = rk;
    while (piv < static_cast<int>(rows.size()) && rows[piv][lead] == 0) ++piv;
    if (piv == static_cast<int>(rows.size())) {
      ++lead;
      continue;
    }
    std::swap(rows[rk], rows[piv]);
    for (int j = rk + 1; j < static_cast<int>(rows.size()); ++j) {
      for (int c = lead + 1; c < n; ++c)
        rows[j][c] = (rows[rk][lead] * rows[j][c] - rows[j][lead] * rows[rk][c]) / prev;
      rows[j][lead] = 0;
    }
    prev = rows[rk][lead];
    ++rk;
    ++lead;
  }
  return rk;
}

// Every vertex subset tested for a common supporting hyperplane; intended for
// dim <= 3 with few vertices.
inline std::set<std::vector<int>> brute_force_faces(const std::vector<VecQ>& verts, int n) {
  const int nv = static_cast<int>(verts.size());
  std::set<std::vector<int>> faces;
  std::vector<int> full(nv);
  for (int i = 0; i < nv; ++i) full[i] = i;
  faces.insert(full);

  // Candidate hyperplanes from every vertex subset: affine functionals
  // vanishing on the subset, supporting the whole point set.
  for (int mask = 1; mask < (1 << nv); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < nv; ++i)
      if (mask & (1 << i)) sel.push_back(i);
    // Affine functionals (c, c0) with <c, p> + c0 = 0 on sel.
    std::vector<VecZ> rows;
    for (int i : sel) {
      VecQ p = verts[i];
      VecZ row = primitive([&] {
        VecQ r = p;
        r.push_back(Rat(1));
        return r;
      }());
      rows.push_back(row);
    }
    auto kern = kernel_basis(rows, n + 1);
    for (const auto& k : kern) {
      VecZ c(k.begin(), k.begin() + n);
      if (is_zero(c)) continue;
      Int c0 = k[n];
      int pos = 0, zero = 0, ng = 0;
      std::vector<int> tight;
      for (int i = 0; i < nv; ++i) {
        Rat v = dot(c, verts[i]) + Rat(c0);
        if (v > 0) ++pos;
        else if (v < 0) ++ng;
        else {
          ++zero;
          tight.push_back(i);
        }
      }
      if (pos == 0 || ng == 0) faces.insert(tight);
    }
  }
  // Close under intersections.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> cur(faces.begin(), faces.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        std::vector<int> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        if (!inter.empty() && faces.insert(inter).second) changed = true;
      }
  }
  return faces;
}

inline Rat rand_rat(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Rat(Int(d(rng)));
}

inline VecZ rand_vec(std::mt19937_64& rng, int n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  VecZ v(n);
  for (int i = 0; i < n; ++i) v[i] = Int(d(rng));
  return v;
}

}  // namespace oracle
