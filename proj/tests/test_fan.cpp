#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirrortoric/fan.hpp"
#include "oracles.hpp"

using namespace mirrortoric;

namespace {
VecZ vz(std::initializer_list<long> xs) {
  VecZ v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

Polytope delta5() {
  return hull_z({vz({1, 0, 0, 0, 0}), vz({0, 1, 0, 0, 0}), vz({0, 0, 1, 0, 0}),
                 vz({0, 0, 0, 1, 0}), vz({0, 0, 0, 0, 1}), vz({-1, -1, -1, -1, -1})},
                5);
}

Polytope delta_p24() {
  return hull_z({vz({1, 0, 0, 0}), vz({0, 1, 0, 0}), vz({0, 0, 1, 0}), vz({0, 0, 0, 1}),
                 vz({-1, -1, -1, 0}), vz({1, 1, 0, -1})},
                4);
}

Polytope nabla() {
  return hull_z({vz({-1, -1, -1, -1, 0}), vz({3, -1, -1, -1, 0}), vz({-1, 3, -1, -1, 0}),
                 vz({-1, -1, 3, -1, 0}), vz({-1, -1, -1, 3, 0}), vz({-1, -1, -1, -1, 4}),
                 vz({0, 0, 0, 0, -1}), vz({2, 0, 0, 0, -1}), vz({0, 2, 0, 0, -1}),
                 vz({0, 0, 2, 0, -1}), vz({0, 0, 0, 2, -1}), vz({0, 0, 0, 0, 1})},
                5);
}

MatZ g_matrix() {
  return MatZ::from_ints({{0, 0, 0, -1},
                          {-1, 1, 0, 0},
                          {-1, 0, 1, -1},
                          {-1, 0, 0, -1},
                          {-1, 1, 0, -1}});
}

int count_dim(const Fan& F, int d) {
  int c = 0;
  for (const auto& cone : F.cones) c += (cone.dim == d);
  return c;
}
}  // namespace

TEST_CASE("fan over the 5-simplex is the projective-space fan") {
  Fan F = fan_over_faces(delta5());
  CHECK(count_dim(F, 1) == 6);
  CHECK(count_dim(F, 5) == 6);
  CHECK(fan_is_valid(F));
}

TEST_CASE("fan over the P(2,4) polytope has six rays") {
  Fan F = fan_over_faces(delta_p24());
  CHECK(count_dim(F, 1) == 6);
  CHECK(fan_is_valid(F));
}

TEST_CASE("fan over the twelve-vertex polytope") {
  Fan F = fan_over_faces(nabla());
  CHECK(count_dim(F, 1) == 12);
  CHECK(count_dim(F, 3) == 50);
}

TEST_CASE("skeleton") {
  Fan F = fan_over_faces(delta_p24());
  Fan S = skeleton(F, 3);
  for (const auto& c : S.cones) CHECK(c.dim <= 3);
  CHECK(skeleton(F, 4).cones.size() == F.cones.size());
  Fan Z = skeleton(F, 0);
  CHECK(Z.cones.size() == 1);
  CHECK(Z.cones[0].is_zero());
}

TEST_CASE("remove_cones maximality contract") {
  Fan F = fan_over_faces(delta_p24());
  auto max = F.maximal_indices();
  Cone top = F.cones[max[0]];
  Fan R = remove_cones(F, {top});
  CHECK(R.cones.size() == F.cones.size() - 1);
  CHECK(remove_cones(F, {}).cones.size() == F.cones.size());

  Cone ray = Cone::from_generators({top.rays[0]}, {}, 4);
  CHECK_THROWS_AS(remove_cones(F, {ray}), std::invalid_argument);
}

TEST_CASE("fan map checks across the dual embedding") {
  MatZ gt = g_matrix().transposed();
  Fan src = fan_over_faces(nabla());
  Fan dst = fan_over_faces(dual(delta_p24()));
  auto bad = is_fan_map(gt, src, dst);
  CHECK(!bad.ok);
  CHECK(!bad.failures.empty());

  auto idf = is_fan_map(MatZ::identity(4), fan_over_faces(delta_p24()), fan_over_faces(delta_p24()));
  CHECK(idf.ok);

  // The embedding direction is a fan map.
  auto fwd = is_fan_map(g_matrix(), fan_over_faces(delta_p24()), fan_over_faces(delta5()));
  CHECK(fwd.ok);

  MatZ h = MatZ::from_ints({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}});
  Polytope P = hull_z({vz({-1, -2, -2, -2}), vz({1, 0, 0, 0}), vz({0, 1, 0, 0}),
                       vz({0, 0, 1, 0}), vz({0, 0, 0, 1})},
                      4);
  auto emb = is_fan_map(h, fan_over_faces(P), fan_over_faces(delta5()));
  CHECK(emb.ok);
}

TEST_CASE("smallest containing cone") {
  Fan F = fan_over_faces(dual(delta_p24()));
  MatZ gt = g_matrix().transposed();
  VecQ t1 = to_q(gt.apply(vz({2, 0, 0, 0, -1})));
  auto c = smallest_containing_cone(F, t1);
  REQUIRE(c.has_value());
  CHECK(c->dim == 3);  // relative interior of a cone over a two-face

  auto z = smallest_containing_cone(F, VecQ(4, Rat(0)));
  REQUIRE(z.has_value());
  CHECK(z->is_zero());

  Fan sk = skeleton(fan_over_faces(delta_p24()), 1);
  // A generic point misses the one-skeleton's support entirely.
  CHECK(!smallest_containing_cone(sk, to_q(vz({1, 1, 1, 7}))).has_value());
}

TEST_CASE("refine basics") {
  Fan F = fan_over_faces(delta_p24());
  Fan R = refine(F, F);
  CHECK(R.cones.size() == F.cones.size());

  Polytope line_pos = hull_z({vz({1}), vz({-1})}, 1);
  Fan L = fan_over_faces(line_pos);
  CHECK(refine(L, L).cones.size() == L.cones.size());
}

TEST_CASE("refinement respects smallest containing cones") {
  Fan F1 = fan_over_faces(delta_p24());
  Fan F2 = fan_over_faces(dual(delta_p24()));
  Fan R = refine(F1, F2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    VecQ x = to_q(oracle::rand_vec(rng, 4, -4, 4));
    auto rc = smallest_containing_cone(R, x);
    auto c1 = smallest_containing_cone(F1, x);
    auto c2 = smallest_containing_cone(F2, x);
    REQUIRE(rc.has_value());
    REQUIRE(c1.has_value());
    REQUIRE(c2.has_value());
    CHECK(c1->contains(*rc));
    CHECK(c2->contains(*rc));
  }
}

TEST_CASE("fan map composition on fixtures") {
  MatZ g = g_matrix();
  MatZ h = MatZ::from_ints({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}});
  Polytope P = hull_z({vz({-1, -2, -2, -2}), vz({1, 0, 0, 0}), vz({0, 1, 0, 0}),
                       vz({0, 0, 1, 0}), vz({0, 0, 0, 1})},
                      4);
  Fan FP = fan_over_faces(P);
  Fan FD = fan_over_faces(delta5());
  // identity . h == h as fan maps
  auto a = is_fan_map(h, FP, FD);
  auto b = is_fan_map(MatZ::identity(5) * h, FP, FD);
  CHECK(a.ok == b.ok);
}

TEST_CASE("cones with lineality") {
  Cone C = Cone::from_generators({vz({1, 0}), vz({-1, 0}), vz({0, 1})}, {}, 2);
  CHECK(C.lineality.size() == 1);
  CHECK(C.dim == 2);
  CHECK(C.contains(to_q(vz({-5, 3}))));
  CHECK(!C.contains(to_q(vz({0, -1}))));

  Cone whole = Cone::from_generators({vz({1, 0}), vz({-1, 0}), vz({0, 1}), vz({0, -1})}, {}, 2);
  CHECK(whole.dim == 2);
  CHECK(whole.rays.empty());
  CHECK(whole.lineality.size() == 2);
}

TEST_CASE("fan json round trip") {
  Fan F = fan_over_faces(delta_p24());
  Fan G = fan_from_json(fan_to_json(F));
  REQUIRE(F.cones.size() == G.cones.size());
  for (size_t i = 0; i < F.cones.size(); ++i) CHECK(F.cones[i] == G.cones[i]);
}
