#include "mirrortoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mirrortoric {

bool Polytope::contains(const VecQ& x) const {
  for (const auto& e : hull_eqs)
    if (dot(e.normal, x) != Rat(e.value)) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) < -Rat(f.offset)) return false;
  return true;
}

bool Polytope::contains_rel_interior(const VecQ& x) const {
  for (const auto& e : hull_eqs)
    if (dot(e.normal, x) != Rat(e.value)) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) <= -Rat(f.offset)) return false;
  return true;
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices)
    if (!is_integral(v)) return false;
  return true;
}

std::vector<VecZ> Polytope::lattice_vertices() const {
  std::vector<VecZ> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(to_z(v));
  return out;
}

Polytope hull(const std::vector<VecQ>& points, int ambient) {
  if (points.empty()) throw std::invalid_argument("hull: no points");
  std::vector<VecQ> pts = points;
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != ambient) throw std::invalid_argument("hull: dimension mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Homogenize to rays (1, p), cleared to integers, and dualize: the extreme
  // rays of {y : <(1,p), y> >= 0} are the facets, its lineality the affine hull.
  std::vector<VecZ> hom;
  hom.reserve(pts.size());
  for (const auto& p : pts) {
    VecQ h(ambient + 1);
    h[0] = 1;
    for (int c = 0; c < ambient; ++c) h[c + 1] = p[c];
    hom.push_back(primitive(h));
  }
  VForm dualcone = dual_description(hom, {}, ambient + 1);

  Polytope P;
  P.ambient = ambient;
  for (const auto& e : dualcone.lineality) {
    HullEq eq;
    eq.normal = VecZ(e.begin() + 1, e.end());
    eq.value = -e[0];
    if (is_zero(eq.normal)) throw std::logic_error("hull: degenerate affine equation");
    P.hull_eqs.push_back(std::move(eq));
  }
  std::vector<VecZ> eq_normals;
  for (const auto& e : P.hull_eqs) eq_normals.push_back(e.normal);
  const int eq_rank = rank(eq_normals);
  P.dim = ambient - eq_rank;

  for (const auto& r : dualcone.rays) {
    FacetIneq f;
    f.normal = VecZ(r.begin() + 1, r.end());
    f.offset = r[0];
    if (is_zero(f.normal)) continue;  // trivial x0 >= 0 row
    // Drop inequalities constant on the affine hull.
    auto with = eq_normals;
    with.push_back(f.normal);
    if (!eq_normals.empty() && rank(with) == eq_rank) continue;
    P.facets.push_back(std::move(f));
  }
  std::sort(P.facets.begin(), P.facets.end(), [](const FacetIneq& a, const FacetIneq& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });

  // Extreme points: active constraints span the ambient space.
  for (const auto& p : pts) {
    std::vector<VecZ> active = eq_normals;
    for (const auto& f : P.facets)
      if (dot(f.normal, p) == -Rat(f.offset)) active.push_back(f.normal);
    if (rank(active) == ambient) P.vertices.push_back(p);
  }
  std::sort(P.vertices.begin(), P.vertices.end());
  return P;
}

Polytope hull_z(const std::vector<VecZ>& points, int ambient) {
  std::vector<VecQ> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_q(p));
  return hull(q, ambient);
}

Polytope dual(const Polytope& P) {
  if (P.dim != P.ambient)
    throw std::invalid_argument("dual: polytope is not full-dimensional");
  VecQ origin(P.ambient, Rat(0));
  if (!P.contains_rel_interior(origin))
    throw std::invalid_argument("dual: origin is not interior");
  std::vector<VecQ> verts;
  verts.reserve(P.facets.size());
  for (const auto& f : P.facets) {
    VecQ u(P.ambient);
    for (int c = 0; c < P.ambient; ++c) u[c] = make_rat(f.normal[c], f.offset);
    verts.push_back(std::move(u));
  }
  return hull(verts, P.ambient);
}

std::vector<Face> all_faces(const Polytope& P) {
  const int nv = static_cast<int>(P.vertices.size());
  std::vector<std::vector<int>> facet_sets;
  for (const auto& f : P.facets) {
    std::vector<int> s;
    for (int i = 0; i < nv; ++i)
      if (dot(f.normal, P.vertices[i]) == -Rat(f.offset)) s.push_back(i);
    facet_sets.push_back(std::move(s));
  }
  std::vector<int> full(nv);
  for (int i = 0; i < nv; ++i) full[i] = i;

  std::set<std::vector<int>> seen;
  seen.insert(full);
  std::vector<std::vector<int>> work{full};
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (const auto& fs : facet_sets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      if (seen.insert(inter).second) work.push_back(inter);
    }
  }

  std::vector<Face> out;
  for (const auto& s : seen) {
    Face f;
    f.vertex_indices = s;
    std::vector<VecQ> dirs;
    for (size_t i = 1; i < s.size(); ++i) dirs.push_back(sub(P.vertices[s[i]], P.vertices[s[0]]));
    f.dim = rank(dirs);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> faces(const Polytope& P, int k) {
  if (k < 0 || k > P.dim) throw std::invalid_argument("faces: dimension out of range");
  std::vector<Face> out;
  for (auto& f : all_faces(P))
    if (f.dim == k) out.push_back(std::move(f));
  return out;
}

namespace {
std::vector<VecZ> lattice_points_impl(const Polytope& P, bool parallel) {
  std::vector<Int> lo(P.ambient), hi(P.ambient);
  for (int c = 0; c < P.ambient; ++c) {
    Rat mn = P.vertices[0][c], mx = P.vertices[0][c];
    for (const auto& v : P.vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[c] = ceil_rat(mn);
    hi[c] = floor_rat(mx);
    if (lo[c] > hi[c]) return {};
  }
  Int total = 1;
  std::vector<Int> radix(P.ambient);
  for (int c = P.ambient - 1; c >= 0; --c) {
    radix[c] = hi[c] - lo[c] + 1;
    total *= radix[c];
  }
  if (total > 10'000'000) throw std::invalid_argument("lattice_points: bounding box too large");
  const long n = total.convert_to<long>();

  auto candidate = [&](long flat) {
    VecZ p(P.ambient);
    for (int c = P.ambient - 1; c >= 0; --c) {
      long r = radix[c].convert_to<long>();
      p[c] = lo[c] + Int(flat % r);
      flat /= r;
    }
    return p;
  };

  std::vector<char> inside(n, 0);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) inside[i] = P.contains(candidate(i)) ? 1 : 0;
  } else {
    for (long i = 0; i < n; ++i) inside[i] = P.contains(candidate(i)) ? 1 : 0;
  }
  std::vector<VecZ> out;
  for (long i = 0; i < n; ++i)
    if (inside[i]) out.push_back(candidate(i));
  return out;  // flat order with last coordinate fastest == lexicographic
}
}  // namespace

std::vector<VecZ> lattice_points(const Polytope& P) { return lattice_points_impl(P, true); }
std::vector<VecZ> lattice_points_serial(const Polytope& P) { return lattice_points_impl(P, false); }

Polytope minkowski(const Polytope& P, const Polytope& Q) {
  if (P.ambient != Q.ambient) throw std::invalid_argument("minkowski: ambient mismatch");
  std::vector<VecQ> sums;
  sums.reserve(P.vertices.size() * Q.vertices.size());
  for (const auto& p : P.vertices)
    for (const auto& q : Q.vertices) sums.push_back(add(p, q));
  return hull(sums, P.ambient);
}

Polytope image(const Polytope& P, const MatZ& A) {
  if (A.cols != P.ambient) throw std::invalid_argument("image: dimension mismatch");
  std::vector<VecQ> pts;
  pts.reserve(P.vertices.size());
  for (const auto& v : P.vertices) pts.push_back(A.apply(v));
  return hull(pts, A.rows);
}

Polytope translate(const Polytope& P, const VecQ& t) {
  std::vector<VecQ> pts;
  pts.reserve(P.vertices.size());
  for (const auto& v : P.vertices) pts.push_back(add(v, t));
  return hull(pts, P.ambient);
}

Polytope dilate(const Polytope& P, const Rat& factor) {
  if (factor <= 0) throw std::invalid_argument("dilate: factor must be positive");
  std::vector<VecQ> pts;
  for (const auto& v : P.vertices) pts.push_back(scale(factor, v));
  return hull(pts, P.ambient);
}

std::optional<Face> locate(const Polytope& P, const VecQ& x) {
  if (!P.contains(x)) return std::nullopt;
  std::vector<int> tight_facets;
  for (size_t j = 0; j < P.facets.size(); ++j)
    if (dot(P.facets[j].normal, x) == -Rat(P.facets[j].offset)) tight_facets.push_back(static_cast<int>(j));
  Face f;
  for (int i = 0; i < static_cast<int>(P.vertices.size()); ++i) {
    bool on_all = true;
    for (int j : tight_facets)
      if (dot(P.facets[j].normal, P.vertices[i]) != -Rat(P.facets[j].offset)) {
        on_all = false;
        break;
      }
    if (on_all) f.vertex_indices.push_back(i);
  }
  std::vector<VecQ> dirs;
  for (size_t i = 1; i < f.vertex_indices.size(); ++i)
    dirs.push_back(sub(P.vertices[f.vertex_indices[i]], P.vertices[f.vertex_indices[0]]));
  f.dim = rank(dirs);
  return f;
}

bool is_reflexive(const Polytope& P) {
  if (P.dim != P.ambient || !P.is_lattice()) return false;
  VecQ origin(P.ambient, Rat(0));
  if (!P.contains_rel_interior(origin)) return false;
  return dual(P).is_lattice();
}

bool same_polytope(const Polytope& P, const Polytope& Q) {
  return P.ambient == Q.ambient && P.vertices == Q.vertices;
}

Polytope face_polytope(const Polytope& P, const Face& f) {
  std::vector<VecQ> pts;
  for (int i : f.vertex_indices) pts.push_back(P.vertices[i]);
  return hull(pts, P.ambient);
}

nlohmann::json polytope_to_json(const Polytope& P) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : P.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) {
      if (is_integral(x))
        row.push_back(rat_num(x).convert_to<long long>());
      else
        row.push_back(rat_str(x));
    }
    verts.push_back(row);
  }
  return {{"dim", P.ambient}, {"vertices", verts}};
}

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw std::invalid_argument("polytope_from_json: missing dim/vertices");
  const int n = j.at("dim").get<int>();
  std::vector<VecQ> pts;
  for (const auto& row : j.at("vertices")) {
    VecQ v;
    for (const auto& x : row) {
      if (x.is_number_integer())
        v.push_back(Rat(Int(x.get<long long>())));
      else
        v.push_back(rat_parse(x.get<std::string>()));
    }
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("polytope_from_json: vertex length mismatch");
    pts.push_back(std::move(v));
  }
  return hull(pts, n);
}

}  // namespace mirrortoric
