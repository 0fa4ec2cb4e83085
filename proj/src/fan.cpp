#include "mirrortoric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mirrortoric {

Cone Cone::from_generators(std::vector<VecZ> rays, std::vector<VecZ> lins, int ambient) {
  // Dual cone first: its extreme rays are our facets, its lineality our span
  // equations. A second pass through the facets canonicalizes the generators.
  std::vector<VecZ> gen;
  for (auto& r : rays) {
    if (static_cast<int>(r.size()) != ambient) throw std::invalid_argument("Cone: ray dimension mismatch");
    if (!mirrortoric::is_zero(r)) gen.push_back(primitive(r));
  }
  std::vector<VecZ> lin;
  for (auto& l : lins) {
    if (static_cast<int>(l.size()) != ambient) throw std::invalid_argument("Cone: lineality dimension mismatch");
    if (!mirrortoric::is_zero(l)) lin.push_back(primitive(l));
  }
  VForm dual = dual_description(gen, lin, ambient);
  return from_hform(dual.rays, dual.lineality, ambient);
}

Cone Cone::from_hform(std::vector<VecZ> ineqs, std::vector<VecZ> eqs, int ambient) {
  Cone c;
  c.ambient = ambient;
  c.ineqs = std::move(ineqs);
  c.eqs = std::move(eqs);
  std::sort(c.ineqs.begin(), c.ineqs.end());
  c.ineqs.erase(std::unique(c.ineqs.begin(), c.ineqs.end()), c.ineqs.end());
  std::sort(c.eqs.begin(), c.eqs.end());
  c.eqs.erase(std::unique(c.eqs.begin(), c.eqs.end()), c.eqs.end());
  VForm v = dual_description(c.ineqs, c.eqs, ambient);
  c.rays = std::move(v.rays);
  c.lineality = std::move(v.lineality);
  std::vector<VecZ> span = c.rays;
  span.insert(span.end(), c.lineality.begin(), c.lineality.end());
  c.dim = rank(span);
  return c;
}

Cone Cone::over(const Polytope& P, const Face& f) {
  std::vector<VecZ> rays;
  for (int i : f.vertex_indices) rays.push_back(primitive(P.vertices[i]));
  return from_generators(std::move(rays), {}, P.ambient);
}

bool Cone::contains(const VecQ& x) const {
  for (const auto& e : eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& a : ineqs)
    if (dot(a, x) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const auto& r : other.rays)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality)
    if (!contains(l) || !contains(neg(l))) return false;
  return true;
}

std::vector<VecZ> Cone::generators_signed() const {
  std::vector<VecZ> g = rays;
  for (const auto& l : lineality) {
    g.push_back(l);
    g.push_back(neg(l));
  }
  return g;
}

VecQ Cone::rel_interior_point() const {
  VecQ s(ambient, Rat(0));
  for (const auto& r : rays) s = add(s, to_q(r));
  return s;
}

std::string Cone::key() const {
  std::ostringstream os;
  for (const auto& r : rays) os << vec_str(r) << "|";
  os << "L";
  for (const auto& l : lineality) os << vec_str(l) << "|";
  return os.str();
}

bool operator==(const Cone& a, const Cone& b) {
  return a.ambient == b.ambient && a.rays == b.rays && a.lineality == b.lineality;
}

std::vector<Cone> cone_faces(const Cone& C) {
  const int nr = static_cast<int>(C.rays.size());
  std::vector<std::vector<int>> tight_sets;
  for (const auto& a : C.ineqs) {
    std::vector<int> s;
    for (int i = 0; i < nr; ++i)
      if (dot(a, C.rays[i]) == 0) s.push_back(i);
    tight_sets.push_back(std::move(s));
  }
  std::vector<int> full(nr);
  for (int i = 0; i < nr; ++i) full[i] = i;
  std::set<std::vector<int>> seen{full};
  std::vector<std::vector<int>> work{full};
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    for (const auto& ts : tight_sets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), ts.begin(), ts.end(), std::back_inserter(inter));
      if (seen.insert(inter).second) work.push_back(inter);
    }
  }
  std::vector<Cone> out;
  for (const auto& s : seen) {
    std::vector<VecZ> rays;
    for (int i : s) rays.push_back(C.rays[i]);
    out.push_back(Cone::from_generators(std::move(rays), C.lineality, C.ambient));
  }
  return out;
}

Cone cone_intersect(const Cone& a, const Cone& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("cone_intersect: ambient mismatch");
  std::vector<VecZ> ineqs = a.ineqs;
  ineqs.insert(ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  std::vector<VecZ> eqs = a.eqs;
  eqs.insert(eqs.end(), b.eqs.begin(), b.eqs.end());
  return Cone::from_hform(std::move(ineqs), std::move(eqs), a.ambient);
}

bool is_face_of(const Cone& face, const Cone& C) {
  if (!C.contains(face)) return false;
  // The candidate must equal C cut by the inequalities tight on it.
  std::vector<VecZ> tight;
  for (const auto& a : C.ineqs) {
    bool all_tight = true;
    for (const auto& g : face.generators_signed())
      if (dot(a, g) != 0) {
        all_tight = false;
        break;
      }
    if (face.is_zero()) all_tight = true;  // zero cone: every inequality tight at 0
    if (all_tight) tight.push_back(a);
  }
  std::vector<VecZ> eqs = C.eqs;
  eqs.insert(eqs.end(), tight.begin(), tight.end());
  Cone cut = Cone::from_hform(C.ineqs, eqs, C.ambient);
  return cut == face;
}

Cone cone_image(const Cone& C, const MatZ& A) {
  std::vector<VecZ> rays, lins;
  for (const auto& r : C.rays) {
    VecZ img = A.apply(r);
    if (!is_zero(img)) rays.push_back(img);
  }
  for (const auto& l : C.lineality) {
    VecZ img = A.apply(l);
    if (!is_zero(img)) lins.push_back(img);
  }
  return Cone::from_generators(std::move(rays), std::move(lins), A.rows);
}

std::vector<int> Fan::maximal_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < cones.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cones.size(); ++j) {
      if (i == j) continue;
      if (cones[j].dim >= cones[i].dim && cones[j].contains(cones[i]) && !(cones[j] == cones[i])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool Fan::has_cone(const Cone& c) const {
  for (const auto& x : cones)
    if (x == c) return true;
  return false;
}

namespace {
void sort_cones(std::vector<Cone>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Cone& a, const Cone& b) {
    return std::tie(a.dim, a.rays, a.lineality) < std::tie(b.dim, b.rays, b.lineality);
  });
}
}  // namespace

Fan fan_from_cones(int ambient, const std::vector<Cone>& cones) {
  std::map<std::string, Cone> pool;
  for (const auto& c : cones)
    for (auto& f : cone_faces(c)) pool.emplace(f.key(), std::move(f));
  Cone zero = Cone::from_generators({}, {}, ambient);
  pool.emplace(zero.key(), zero);
  Fan F;
  F.ambient = ambient;
  for (auto& [k, c] : pool) F.cones.push_back(std::move(c));
  sort_cones(F.cones);
  return F;
}

Fan fan_over_faces(const Polytope& P) {
  VecQ origin(P.ambient, Rat(0));
  if (P.dim != P.ambient || !P.contains_rel_interior(origin))
    throw std::invalid_argument("fan_over_faces: origin must be interior");
  std::vector<Cone> cones;
  for (const auto& f : all_faces(P))
    if (f.dim < P.dim) cones.push_back(Cone::over(P, f));
  return fan_from_cones(P.ambient, cones);
}

Fan skeleton(const Fan& F, int k) {
  Fan out;
  out.ambient = F.ambient;
  for (const auto& c : F.cones)
    if (c.dim <= k) out.cones.push_back(c);
  return out;
}

Fan remove_cones(const Fan& F, const std::vector<Cone>& S) {
  for (const auto& s : S) {
    if (!F.has_cone(s)) throw std::invalid_argument("remove_cones: cone not in fan");
    for (const auto& c : F.cones)
      if (!(c == s) && c.contains(s))
        throw std::invalid_argument("remove_cones: cone is not maximal in the fan");
  }
  Fan out;
  out.ambient = F.ambient;
  for (const auto& c : F.cones) {
    bool removed = false;
    for (const auto& s : S)
      if (c == s) {
        removed = true;
        break;
      }
    if (!removed) out.cones.push_back(c);
  }
  return out;
}

FanMapCheck is_fan_map(const MatZ& A, const Fan& F1, const Fan& F2) {
  FanMapCheck res;
  res.ok = true;
  for (const auto& c : F1.cones) {
    Cone img = cone_image(c, A);
    bool found = false;
    for (const auto& d : F2.cones)
      if (d.contains(img)) {
        found = true;
        break;
      }
    if (!found) {
      res.ok = false;
      res.failures.push_back({c, img});
    }
  }
  return res;
}

std::optional<Cone> smallest_containing_cone(const Fan& F, const VecQ& x) {
  const Cone* best = nullptr;
  for (const auto& c : F.cones)
    if (c.contains(x) && (!best || c.dim < best->dim)) best = &c;
  if (!best) return std::nullopt;
  return *best;
}

Fan refine(const Fan& F1, const Fan& F2) {
  if (F1.ambient != F2.ambient) throw std::invalid_argument("refine: ambient mismatch");
  std::vector<Cone> pieces;
  auto m1 = F1.maximal_indices();
  auto m2 = F2.maximal_indices();
  for (int i : m1)
    for (int j : m2) pieces.push_back(cone_intersect(F1.cones[i], F2.cones[j]));
  return fan_from_cones(F1.ambient, pieces);
}

bool fan_is_valid(const Fan& F) {
  for (const auto& c : F.cones)
    for (const auto& f : cone_faces(c))
      if (!F.has_cone(f)) return false;
  for (size_t i = 0; i < F.cones.size(); ++i)
    for (size_t j = i + 1; j < F.cones.size(); ++j) {
      Cone inter = cone_intersect(F.cones[i], F.cones[j]);
      if (!is_face_of(inter, F.cones[i]) || !is_face_of(inter, F.cones[j])) return false;
    }
  return true;
}

nlohmann::json fan_to_json(const Fan& F) {
  nlohmann::json cones = nlohmann::json::array();
  for (const auto& c : F.cones) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& r : c.rays) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : r) row.push_back(x.convert_to<long long>());
      rays.push_back(row);
    }
    nlohmann::json obj = {{"rays", rays}};
    if (!c.lineality.empty()) {
      nlohmann::json lins = nlohmann::json::array();
      for (const auto& l : c.lineality) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : l) row.push_back(x.convert_to<long long>());
        lins.push_back(row);
      }
      obj["lineality"] = lins;
    }
    cones.push_back(obj);
  }
  return {{"ambient_dim", F.ambient}, {"cones", cones}};
}

Fan fan_from_json(const nlohmann::json& j) {
  const int n = j.at("ambient_dim").get<int>();
  std::vector<Cone> cones;
  for (const auto& obj : j.at("cones")) {
    std::vector<VecZ> rays, lins;
    for (const auto& row : obj.at("rays")) {
      VecZ v;
      for (const auto& x : row) v.push_back(Int(x.get<long long>()));
      rays.push_back(std::move(v));
    }
    if (obj.contains("lineality"))
      for (const auto& row : obj.at("lineality")) {
        VecZ v;
        for (const auto& x : row) v.push_back(Int(x.get<long long>()));
        lins.push_back(std::move(v));
      }
    cones.push_back(Cone::from_generators(std::move(rays), std::move(lins), n));
  }
  return fan_from_cones(n, cones);
}

}  // namespace mirrortoric
