#include "mirrortoric/plconvex.hpp"

#include <algorithm>
#include <functional>

namespace mirrortoric {

struct PLConvexFunction::Node {
  enum class Kind { newton, pullback, sum } kind;
  int domain_dim = 0;
  Polytope q;                              // newton
  std::shared_ptr<const Node> inner, rhs;  // pullback / sum
  MatZ map;                                // pullback: domain -> inner domain
};

PLConvexFunction PLConvexFunction::from_polytope(const Polytope& Q) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::newton;
  n->domain_dim = Q.ambient;
  n->q = Q;
  PLConvexFunction f;
  f.node_ = std::move(n);
  return f;
}

PLConvexFunction PLConvexFunction::zero(int dim) {
  return from_polytope(hull({VecQ(dim, Rat(0))}, dim));
}

int PLConvexFunction::domain_dim() const { return node_->domain_dim; }

namespace {
Rat eval_node(const PLConvexFunction::Node&, const VecQ&);
}

Rat PLConvexFunction::operator()(const VecQ& v) const {
  if (static_cast<int>(v.size()) != node_->domain_dim)
    throw std::invalid_argument("PLConvexFunction: dimension mismatch");
  return eval_node(*node_, v);
}

namespace {

Rat eval_node(const PLConvexFunction::Node& n, const VecQ& v) {
  using Kind = PLConvexFunction::Node::Kind;
  switch (n.kind) {
    case Kind::newton: {
      bool first = true;
      Rat best;
      for (const auto& p : n.q.vertices) {
        Rat d = dot(p, v);
        if (first || d < best) {
          best = d;
          first = false;
        }
      }
      return -best;
    }
    case Kind::pullback:
      return eval_node(*n.inner, n.map.apply(v));
    case Kind::sum:
      return eval_node(*n.inner, v) + eval_node(*n.rhs, v);
  }
  throw std::logic_error("eval_node: bad kind");
}

std::string covector_key(const VecQ& c) {
  return vec_str(c);
}

// Union of the maximal cones sharing a covector; for a convex function the
// equality region of a linear part is itself a convex cone.
std::vector<std::pair<Cone, VecQ>> merge_by_covector(
    const std::vector<std::pair<Cone, VecQ>>& pieces,
    const std::function<Rat(const VecQ&)>& eval) {
  std::map<std::string, std::pair<std::vector<const Cone*>, VecQ>> groups;
  for (const auto& [cone, cov] : pieces) {
    auto& g = groups[covector_key(cov)];
    g.first.push_back(&cone);
    g.second = cov;
  }
  std::vector<std::pair<Cone, VecQ>> out;
  for (auto& [key, g] : groups) {
    std::vector<VecZ> rays, lins;
    int ambient = g.first.front()->ambient;
    for (const Cone* c : g.first) {
      rays.insert(rays.end(), c->rays.begin(), c->rays.end());
      lins.insert(lins.end(), c->lineality.begin(), c->lineality.end());
    }
    Cone merged = Cone::from_generators(std::move(rays), std::move(lins), ambient);
    VecQ s = merged.rel_interior_point();
    if (eval(s) != dot(g.second, s))
      throw std::logic_error("merge_by_covector: merged cone leaves the linearity region");
    out.emplace_back(std::move(merged), g.second);
  }
  return out;
}

LinearityFan fan_from_pieces(int ambient, std::vector<std::pair<Cone, VecQ>> pieces) {
  LinearityFan lf;
  std::vector<Cone> cones;
  cones.reserve(pieces.size());
  for (auto& [c, cov] : pieces) cones.push_back(c);
  lf.fan = fan_from_cones(ambient, cones);
  lf.maximal = std::move(pieces);
  std::sort(lf.maximal.begin(), lf.maximal.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.dim, a.first.rays, a.first.lineality) <
           std::tie(b.first.dim, b.first.rays, b.first.lineality);
  });
  return lf;
}

std::vector<std::pair<Cone, VecQ>> linearity_pieces(const PLConvexFunction::Node& n);

std::vector<std::pair<Cone, VecQ>> newton_pieces(const Polytope& q) {
  std::vector<std::pair<Cone, VecQ>> out;
  for (const auto& p : q.vertices) {
    std::vector<VecZ> ineqs;
    for (const auto& r : q.vertices) {
      if (r == p) continue;
      ineqs.push_back(primitive(sub(r, p)));
    }
    std::sort(ineqs.begin(), ineqs.end());
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
    Cone normal = Cone::from_hform(std::move(ineqs), {}, q.ambient);
    out.emplace_back(std::move(normal), neg(p));
  }
  return out;
}

std::vector<std::pair<Cone, VecQ>> linearity_pieces(const PLConvexFunction::Node& n) {
  using Kind = PLConvexFunction::Node::Kind;
  switch (n.kind) {
    case Kind::newton:
      return newton_pieces(n.q);
    case Kind::pullback: {
      auto inner = linearity_pieces(*n.inner);
      MatZ At = n.map.transposed();
      std::vector<std::pair<Cone, VecQ>> out;
      for (const auto& [cone, cov] : inner) {
        std::vector<VecZ> ineqs, eqs;
        for (const auto& a : cone.ineqs) {
          VecZ row = At.apply(a);
          if (!is_zero(row)) ineqs.push_back(primitive(row));
        }
        for (const auto& e : cone.eqs) {
          VecZ row = At.apply(e);
          if (!is_zero(row)) eqs.push_back(primitive(row));
        }
        Cone pre = Cone::from_hform(std::move(ineqs), std::move(eqs), n.domain_dim);
        out.emplace_back(std::move(pre), At.apply(cov));
      }
      return merge_by_covector(out, [&](const VecQ& v) { return eval_node(n, v); });
    }
    case Kind::sum: {
      auto a = linearity_pieces(*n.inner);
      auto b = linearity_pieces(*n.rhs);
      std::vector<std::pair<Cone, VecQ>> out;
      for (const auto& [ca, cova] : a)
        for (const auto& [cb, covb] : b) {
          Cone inter = cone_intersect(ca, cb);
          if (inter.dim < n.domain_dim) continue;
          out.emplace_back(inter, add(cova, covb));
        }
      return merge_by_covector(out, [&](const VecQ& v) { return eval_node(n, v); });
    }
  }
  throw std::logic_error("linearity_pieces: bad kind");
}

Polytope newton_from_pieces(int dim, const std::vector<std::pair<Cone, VecQ>>& pieces,
                            const std::function<Rat(const VecQ&)>& eval) {
  // Newt(f) = {u : <u,g> >= -f(g)} over the generators of a complete fan on
  // which f is linear; homogenize with a leading t coordinate and dualize.
  std::vector<VecZ> rows;
  for (const auto& [cone, cov] : pieces) {
    for (const auto& g : cone.generators_signed()) {
      VecQ row(dim + 1);
      row[0] = eval(to_q(g));
      for (int c = 0; c < dim; ++c) row[c + 1] = Rat(g[c]);
      rows.push_back(primitive(row));
    }
  }
  VecZ tpos(dim + 1, Int(0));
  tpos[0] = 1;
  rows.push_back(tpos);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  VForm v = dual_description(rows, {}, dim + 1);
  if (!v.lineality.empty()) throw std::logic_error("newton: unbounded Newton polytope");
  std::vector<VecQ> verts;
  for (const auto& r : v.rays) {
    if (r[0] == 0) throw std::logic_error("newton: unbounded Newton polytope");
    VecQ u(dim);
    for (int c = 0; c < dim; ++c) u[c] = make_rat(r[c + 1], r[0]);
    verts.push_back(std::move(u));
  }
  return hull(verts, dim);
}

}  // namespace

Polytope PLConvexFunction::newton() const {
  if (node_->kind == Node::Kind::newton) return node_->q;
  return newton_recomputed();
}

Polytope PLConvexFunction::newton_recomputed() const {
  auto pieces = linearity_pieces(*node_);
  return newton_from_pieces(node_->domain_dim, pieces,
                            [&](const VecQ& v) { return eval_node(*node_, v); });
}

LinearityFan PLConvexFunction::linearity_fan() const {
  return fan_from_pieces(node_->domain_dim, linearity_pieces(*node_));
}

PLConvexFunction pullback(const PLConvexFunction& f, const MatZ& p) {
  if (p.rows != f.domain_dim()) throw std::invalid_argument("pullback: map range mismatch");
  auto n = std::make_shared<PLConvexFunction::Node>();
  n->kind = PLConvexFunction::Node::Kind::pullback;
  n->domain_dim = p.cols;
  n->inner = f.node_;
  n->map = p;
  PLConvexFunction out;
  out.node_ = std::move(n);
  return out;
}

PLConvexFunction add(const PLConvexFunction& f, const PLConvexFunction& g) {
  if (f.domain_dim() != g.domain_dim()) throw std::invalid_argument("add: domain mismatch");
  auto n = std::make_shared<PLConvexFunction::Node>();
  n->kind = PLConvexFunction::Node::Kind::sum;
  n->domain_dim = f.domain_dim();
  n->inner = f.node_;
  n->rhs = g.node_;
  PLConvexFunction out;
  out.node_ = std::move(n);
  return out;
}

PLConvexFunction PLConvexFunction::from_ray_values(const Fan& F, const std::map<VecZ, Rat>& values) {
  auto value_of = [&](const VecZ& r) {
    auto it = values.find(r);
    if (it == values.end())
      throw std::invalid_argument("from_ray_values: missing value on ray " + vec_str(r));
    return it->second;
  };
  std::vector<std::pair<Cone, VecQ>> pieces;
  for (int i : F.maximal_indices()) {
    const Cone& C = F.cones[i];
    if (!C.is_pointed()) throw std::invalid_argument("from_ray_values: cone with lineality");
    VecQ rhs;
    std::vector<VecZ> rows;
    for (const auto& r : C.rays) {
      rows.push_back(r);
      rhs.push_back(value_of(r));
    }
    auto sol = solve_linear(rows, rhs);
    if (sol.status != SolveStatus::unique)
      throw std::invalid_argument("from_ray_values: ray values do not pin a covector");
    pieces.emplace_back(C, sol.x);
  }
  // Lower convexity: the piecewise definition must agree with the max of the
  // covectors at every ray and at a relative-interior point of every cone.
  auto maxval = [&](const VecQ& x) {
    Rat best;
    bool first = true;
    for (const auto& [c, cov] : pieces) {
      Rat v = dot(cov, x);
      if (first || v > best) {
        best = v;
        first = false;
      }
    }
    return best;
  };
  for (const auto& [C, cov] : pieces) {
    for (const auto& r : C.rays)
      if (maxval(to_q(r)) != value_of(r))
        throw std::invalid_argument("from_ray_values: values are not lower convex");
    VecQ s = C.rel_interior_point();
    if (maxval(s) != dot(cov, s))
      throw std::invalid_argument("from_ray_values: values are not lower convex");
  }
  std::vector<VecQ> negcovs;
  for (const auto& [c, cov] : pieces) negcovs.push_back(neg(cov));
  int dim = F.ambient;
  return from_polytope(hull(negcovs, dim));
}

PLConvexFunction boundary_function(const Polytope& P) { return PLConvexFunction::from_polytope(dual(P)); }

PLConvexFunction section_function(const Polytope& Q, const VecZ& m) {
  if (!Q.contains(m)) throw std::invalid_argument("section_function: point is not in the polytope");
  return PLConvexFunction::from_polytope(translate(Q, to_q(neg(m))));
}

StrictConvexityVerdict is_strictly_convex_on(const PLConvexFunction& f, const Fan& F) {
  // For sublinear f it suffices to certify, per maximal cone: the fitted
  // linear part agrees at the generators and one relative-interior point
  // (linearity on the cone), stays <= f at every ray of the fan (global
  // support), and stays strictly below f at the relative-interior points of
  // the other maximal cones (tight exactly on its own cone).
  auto maxidx = F.maximal_indices();
  std::vector<const Cone*> max_cones;
  std::vector<VecQ> covs;
  std::vector<VecQ> interior_pts;
  std::vector<Rat> interior_vals;
  for (int i : maxidx) {
    const Cone& C = F.cones[i];
    if (C.dim != F.ambient)
      throw std::invalid_argument("is_strictly_convex_on: maximal cones must be full-dimensional");
    std::vector<VecZ> rows = C.generators_signed();
    VecQ rhs;
    for (const auto& g : rows) rhs.push_back(f(g));
    auto sol = solve_linear(rows, rhs);
    if (sol.status == SolveStatus::inconsistent)
      return {ConvexityStatus::not_piecewise_linear,
              "no linear part matches the generator values on cone " + C.key()};
    if (sol.status != SolveStatus::unique)
      throw std::logic_error("is_strictly_convex_on: underdetermined covector on full-dimensional cone");
    VecQ s = C.rel_interior_point();
    Rat fs = f(s);
    if (fs != dot(sol.x, s))
      return {ConvexityStatus::not_piecewise_linear, "not linear inside cone " + C.key()};
    max_cones.push_back(&C);
    covs.push_back(sol.x);
    interior_pts.push_back(std::move(s));
    interior_vals.push_back(std::move(fs));
  }

  std::vector<VecZ> probes;
  for (const auto& c : F.cones) {
    if (c.dim == 1) probes.push_back(c.rays[0]);
    for (const auto& l : c.lineality) {
      probes.push_back(l);
      probes.push_back(neg(l));
    }
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::vector<Rat> probe_vals;
  probe_vals.reserve(probes.size());
  for (const auto& r : probes) probe_vals.push_back(f(r));

  for (size_t i = 0; i < max_cones.size(); ++i) {
    for (size_t p = 0; p < probes.size(); ++p)
      if (dot(covs[i], probes[p]) > probe_vals[p])
        return {ConvexityStatus::not_strictly_convex,
                "function drops below a linear part at ray " + vec_str(probes[p])};
    for (size_t j = 0; j < max_cones.size(); ++j) {
      if (i == j) continue;
      Rat diff = interior_vals[j] - dot(covs[i], interior_pts[j]);
      if (diff == 0)
        return {ConvexityStatus::not_strictly_convex,
                "linear part of " + max_cones[i]->key() + " stays tight on " + max_cones[j]->key()};
      if (diff < 0)
        return {ConvexityStatus::not_strictly_convex,
                "function drops below a linear part outside its cone"};
    }
  }
  return {ConvexityStatus::strictly_convex, ""};
}

OrbitExclusion orbit_excluded(const Cone& C, const Polytope& Q) {
  OrbitExclusion out;
  for (const auto& m : lattice_points(Q)) {
    PLConvexFunction phi = section_function(Q, m);
    bool zero_on_cone = true;
    for (const auto& g : C.generators_signed())
      if (phi(g) != 0) {
        zero_on_cone = false;
        break;
      }
    if (zero_on_cone) {
      ++out.zero_count;
      out.survivors.push_back(m);
    }
  }
  out.excluded = (out.zero_count == 1);
  return out;
}

}  // namespace mirrortoric
