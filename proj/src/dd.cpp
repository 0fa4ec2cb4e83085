#include "mirrortoric/dd.hpp"

#include <algorithm>
#include <cstdint>

namespace mirrortoric {

namespace {

struct BitSet {
  std::vector<uint64_t> w;
  explicit BitSet(size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  bool subset_of(const BitSet& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  static BitSet intersect(const BitSet& a, const BitSet& b) {
    BitSet r;
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
};

struct Ray {
  VecZ v;
  BitSet tight;  // over all inequality indices, filled for processed ones
};

// Extreme rays of a pointed cone {z : A z >= 0} in R^k, rank(A) = k.
std::vector<VecZ> dd_pointed(const std::vector<VecZ>& A, int k) {
  if (k == 0) return {};
  const size_t m = A.size();

  // Seed: k rows forming an invertible matrix.
  std::vector<int> seed;
  {
    std::vector<VecQ> acc;
    for (size_t i = 0; i < m && static_cast<int>(seed.size()) < k; ++i) {
      acc.push_back(to_q(A[i]));
      if (rank(acc) == static_cast<int>(acc.size()))
        seed.push_back(static_cast<int>(i));
      else
        acc.pop_back();
    }
    if (static_cast<int>(seed.size()) < k)
      throw std::logic_error("dd_pointed: inequality system is not pointed");
  }

  std::vector<VecQ> seed_rows;
  for (int i : seed) seed_rows.push_back(to_q(A[i]));
  auto inv = inverse(seed_rows);
  if (!inv) throw std::logic_error("dd_pointed: singular seed");

  std::vector<bool> processed(m, false);
  for (int i : seed) processed[i] = true;

  auto recompute_tight = [&](Ray& r) {
    r.tight = BitSet(m);
    for (size_t i = 0; i < m; ++i)
      if (processed[i] && dot(A[i], r.v) == 0) r.tight.set(i);
  };

  std::vector<Ray> rays;
  for (int j = 0; j < k; ++j) {
    VecQ column(k);
    for (int i = 0; i < k; ++i) column[i] = (*inv)[i][j];
    Ray r;
    r.v = primitive(column);
    recompute_tight(r);
    rays.push_back(std::move(r));
  }

  for (size_t t = 0; t < m; ++t) {
    if (processed[t]) continue;
    processed[t] = true;
    std::vector<Int> s(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(A[t], rays[i].v);
      if (s[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) rays[i].tight.set(t);
      continue;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) next.push_back(rays[i]);
      if (s[i] == 0) {
        rays[i].tight.set(t);
        next.push_back(rays[i]);
      }
    }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        BitSet common = BitSet::intersect(rays[p].tight, rays[q].tight);
        bool adjacent = true;
        for (size_t o = 0; o < rays.size(); ++o) {
          if (o == p || o == q) continue;
          if (common.subset_of(rays[o].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        VecZ combo(A[t].size());
        for (size_t c = 0; c < combo.size(); ++c)
          combo[c] = s[p] * rays[q].v[c] - s[q] * rays[p].v[c];
        Ray nr;
        nr.v = primitive(combo);
        recompute_tight(nr);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    // Dedupe (combination rays can coincide).
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.v < b.v; });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const Ray& a, const Ray& b) { return a.v == b.v; }),
               rays.end());
  }

  std::vector<VecZ> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VecZ> span_basis(const std::vector<VecZ>& gens, int n) {
  std::vector<VecQ> m;
  for (const auto& g : gens) m.push_back(to_q(g));
  // Reduced row echelon over Q.
  int rk = 0, lead = 0;
  while (rk < static_cast<int>(m.size()) && lead < n) {
    int piv = rk;
    while (piv < static_cast<int>(m.size()) && m[piv][lead] == 0) ++piv;
    if (piv == static_cast<int>(m.size())) {
      ++lead;
      continue;
    }
    std::swap(m[rk], m[piv]);
    Rat p = m[rk][lead];
    for (int c = 0; c < n; ++c) m[rk][c] /= p;
    for (int j = 0; j < static_cast<int>(m.size()); ++j) {
      if (j == rk || m[j][lead] == 0) continue;
      Rat f = m[j][lead];
      for (int c = 0; c < n; ++c) m[j][c] -= f * m[rk][c];
    }
    ++rk;
    ++lead;
  }
  std::vector<VecZ> out;
  for (int i = 0; i < rk; ++i) out.push_back(primitive(m[i]));
  std::sort(out.begin(), out.end());
  return out;
}

VForm dual_description(const std::vector<VecZ>& ineqs, const std::vector<VecZ>& eqs, int n) {
  std::vector<VecZ> stacked = ineqs;
  stacked.insert(stacked.end(), eqs.begin(), eqs.end());
  std::vector<VecZ> lin = kernel_basis(stacked, n);

  std::vector<VecZ> all_eqs = eqs;
  if (!lin.empty()) {
    // Split off the lineality space; the rays live in its orthogonal complement.
    all_eqs.insert(all_eqs.end(), lin.begin(), lin.end());
  }

  // Substitute the equalities away: x = N z for N a kernel basis of the
  // equality rows, then run pointed DD in z-space.
  std::vector<VecZ> subspace = kernel_basis(all_eqs, n);
  const int k = static_cast<int>(subspace.size());
  VForm out;
  out.lineality = span_basis(lin, n);
  if (k == 0) return out;

  std::vector<VecZ> reduced;
  reduced.reserve(ineqs.size());
  for (const auto& a : ineqs) {
    VecZ row(k);
    bool nonzero = false;
    for (int j = 0; j < k; ++j) {
      row[j] = dot(a, subspace[j]);
      if (row[j] != 0) nonzero = true;
    }
    if (nonzero) reduced.push_back(primitive(row));
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  std::vector<VecZ> zrays = dd_pointed(reduced, k);
  for (const auto& z : zrays) {
    VecZ x(n, Int(0));
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < n; ++c) x[c] += z[j] * subspace[j][c];
    out.rays.push_back(primitive(x));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace mirrortoric
