#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirrortoric/numeric.hpp"
#include "oracles.hpp"

#include <random>

using namespace mirrortoric;

namespace {
MatZ g_matrix() {
  return MatZ::from_ints({{0, 0, 0, -1},
                          {-1, 1, 0, 0},
                          {-1, 0, 1, -1},
                          {-1, 0, 0, -1},
                          {-1, 1, 0, -1}});
}

MatZ h_matrix() {
  return MatZ::from_ints({{0, 0, 0, 1},
                          {0, 0, 1, 0},
                          {0, 1, 0, 0},
                          {1, 0, 0, 0},
                          {2, 0, 0, 0}});
}

VecZ vz(std::initializer_list<long> xs) {
  VecZ v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}
}  // namespace

TEST_CASE("apply: embedding matrix columns") {
  MatZ g = g_matrix();
  CHECK(g.apply(vz({1, 0, 0, 0})) == vz({0, -1, -1, -1, -1}));
  CHECK(MatZ::identity(4).apply(vz({3, -1, -1, -1})) == vz({3, -1, -1, -1}));
  MatZ gt = g.transposed();
  CHECK(gt.apply(vz({2, 0, 0, 0, -1})) == vz({1, -1, 0, -1}));
}

TEST_CASE("apply rejects dimension mismatch") {
  MatZ g = g_matrix();
  CHECK_THROWS_AS(g.apply(vz({1, 0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("kernel_basis fixtures") {
  auto kg = kernel_basis(g_matrix().transposed());
  REQUIRE(kg.size() == 1);
  CHECK(kg[0] == vz({1, 1, 0, 0, -1}));

  CHECK(kernel_basis(MatZ::identity(5)).empty());

  auto kh = kernel_basis(h_matrix().transposed());
  REQUIRE(kh.size() == 1);
  CHECK(kh[0] == vz({0, 0, 0, 2, -1}));
}

TEST_CASE("kernel_basis of the degenerate-direction check by brute force") {
  // Independent confirmation for h*: scan a small integer box for kernel
  // vectors and saturate to primitive.
  MatZ ht = h_matrix().transposed();
  std::vector<VecZ> found;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d)
          for (long e = -2; e <= 2; ++e) {
            VecZ v = vz({a, b, c, d, e});
            if (is_zero(v)) continue;
            if (is_zero(ht.apply(v))) found.push_back(primitive(v));
          }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  REQUIRE(found.size() == 2);  // +-(0,0,0,2,-1)
  CHECK(found[1] == vz({0, 0, 0, 2, -1}));
}

TEST_CASE("primitive") {
  CHECK(primitive(vz({2, 0, 0, 0, -2})) == vz({1, 0, 0, 0, -1}));
  CHECK(primitive(vz({3, -1, -1, -1})) == vz({3, -1, -1, -1}));
  CHECK(primitive(vz({0, 0, -4, 2})) == vz({0, 0, -2, 1}));
  CHECK_THROWS_AS(primitive(vz({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("primitive is idempotent on random vectors") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    VecZ v = oracle::rand_vec(rng, 5, -20, 20);
    if (is_zero(v)) continue;
    VecZ p = primitive(v);
    CHECK(primitive(p) == p);
  }
}

TEST_CASE("apply is linear on random inputs") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    MatZ A(3, 4);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) A.at(r, c) = Int(static_cast<long>(rng() % 21) - 10);
    VecZ x = oracle::rand_vec(rng, 4, -50, 50);
    VecZ y = oracle::rand_vec(rng, 4, -50, 50);
    CHECK(A.apply(add(x, y)) == add(A.apply(x), A.apply(y)));
  }
}

TEST_CASE("kernel vectors annihilate and count matches a rank oracle") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 120; ++t) {
    int m = 1 + static_cast<int>(rng() % 5);
    int n = 1 + static_cast<int>(rng() % 5);
    MatZ A(m, n);
    std::vector<VecZ> rows;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) A.at(r, c) = Int(static_cast<long>(rng() % 7) - 3);
      rows.push_back(A.row(r));
    }
    auto kern = kernel_basis(A);
    for (const auto& v : kern) {
      CHECK(is_zero(A.apply(v)));
      CHECK(primitive(v) == v);
    }
    int rk = oracle::bareiss_rank(rows, n);
    CHECK(static_cast<int>(kern.size()) == n - rk);
  }
}

TEST_CASE("rational helpers") {
  CHECK(rat_str(make_rat(Int(-4), Int(-8))) == "1/2");
  CHECK(rat_parse("-7/3") == make_rat(Int(7), Int(-3)));
  CHECK(floor_rat(make_rat(Int(-7), Int(2))) == -4);
  CHECK(ceil_rat(make_rat(Int(-7), Int(2))) == -3);
  CHECK(rat_pow(make_rat(Int(2), Int(3)), -2) == make_rat(Int(9), Int(4)));
}

TEST_CASE("solve_linear outcomes") {
  std::vector<VecQ> rows = {to_q(vz({1, 0})), to_q(vz({0, 1}))};
  auto r = solve_linear(rows, VecQ{Rat(2), Rat(3)});
  REQUIRE(r.status == SolveStatus::unique);
  CHECK(r.x == VecQ{Rat(2), Rat(3)});

  std::vector<VecQ> bad = {to_q(vz({1, 1})), to_q(vz({2, 2}))};
  CHECK(solve_linear(bad, VecQ{Rat(1), Rat(3)}).status == SolveStatus::inconsistent);
  CHECK(solve_linear(bad, VecQ{Rat(1), Rat(2)}).status == SolveStatus::underdetermined);
}
