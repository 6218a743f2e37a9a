#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace qca;
using namespace testing;

TEST_CASE("level-1 exchange matrix of the triangle quiver") {
  auto b = b_matrix(build_z(triangle(), 1));
  CHECK(b == IntMatrix::from_rows({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}, {-1, 0, 0}, {1, -1, 0}, {1, 1, -1}}));
}

TEST_CASE("level-1 ice quiver of A3") {
  IceQuiver iq = build_z(a3(), 1);
  std::vector<Arrow> got = iq.arrows(), want = {{2, 3}, {1, 3}, {6, 1}, {6, 2}, {1, 4}, {2, 5}, {3, 6}};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(iq.total() == 6);
  CHECK(iq.mutable_count() == 3);
}

TEST_CASE("level-2 ice quiver of the triangle quiver") {
  IceQuiver iq = build_z(triangle(), 2);
  std::vector<Arrow> want = {{1, 2}, {2, 3}, {1, 3}, {5, 1}, {6, 1}, {6, 2}, {1, 4}, {2, 5}, {3, 6},
                             {4, 5}, {4, 6}, {5, 6}, {4, 7}, {5, 8}, {6, 9}, {8, 4}, {9, 5}, {9, 4}};
  std::vector<Arrow> got = iq.arrows();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK_FALSE(iq.has_frozen_frozen_arrow());
}

TEST_CASE("no frozen-frozen arrows and level-l vertex counts") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + t % 4, level = 1 + t % 3;
    IceQuiver iq = build_z(random_quiver(rng, n), level);
    CHECK(iq.total() == (level + 1) * n);
    CHECK(iq.mutable_count() == level * n);
    CHECK_FALSE(iq.has_frozen_frozen_arrow());
  }
}

TEST_CASE("full matrix is skew-symmetric and extends the mutable part") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    IceQuiver iq = build_z(random_quiver(rng, 1 + t % 4), 1 + t % 2);
    IntMatrix full = full_b_matrix(iq), b = b_matrix(iq);
    CHECK(full.is_skew_symmetric());
    CHECK(full.block(0, 0, full.rows(), iq.mutable_count()) == b);
  }
}

TEST_CASE("Lambda is minus the inverse of the full signed adjacency matrix") {
  std::mt19937_64 rng(13);
  int tested = 0;
  for (int t = 0; t < 30; ++t) {
    IceQuiver iq = build_z(random_quiver(rng, 1 + t % 4), 1);
    IntMatrix lam = lambda_z(iq), full = full_b_matrix(iq);
    IntMatrix prod = lam * full;
    bool minus_identity = true;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) minus_identity = minus_identity && prod(i, j) == (i == j ? -1 : 0);
    CHECK(minus_identity);
    ++tested;
  }
  CHECK(tested == 30);
}

TEST_CASE("path counts agree with a depth-first oracle") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    Quiver q = random_quiver(rng, 1 + t % 5);
    CHECK(path_count_matrix(q).to_ll() == oracle::dfs_path_counts(q.size(), q.arrows()));
  }
}

TEST_CASE("admissible renumbering of an arbitrary acyclic labelling") {
  auto r = admissible_renumbering(3, {{3, 1}, {2, 1}});
  for (const auto& a : r.quiver.arrows()) CHECK(a.source < a.target);
  CHECK(r.quiver.arrows().size() == 2);
  CHECK_THROWS_AS(admissible_renumbering(2, {{1, 2}, {2, 1}}), Error);
}

TEST_CASE("invalid quivers are rejected") {
  CHECK_THROWS_AS(Quiver(2, {{2, 1}}), Error);
  CHECK_THROWS_AS(Quiver(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(Quiver(2, {{1, 3}}), Error);
  CHECK_THROWS_AS(build_z(a2(), 0), Error);
}

TEST_CASE("Euler form matches dim-vector formula") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    Quiver q = random_quiver(rng, 1 + t % 4);
    std::vector<long long> x(q.size()), y(q.size());
    for (auto& v : x) v = d(rng);
    for (auto& v : y) v = d(rng);
    long long want = 0;
    for (int i = 0; i < q.size(); ++i) want += x[i] * y[i];
    for (const auto& a : q.arrows()) want -= x[a.source - 1] * y[a.target - 1];
    CHECK(euler_form(q, K0Class::from(x), K0Class::from(y)) == Int(static_cast<long>(want)));
  }
}

TEST_CASE("Coxeter transformation sends projectives to minus injectives") {
  for (const Quiver& q : {a3(), triangle(), kronecker()}) {
    Grothendieck k0(q);
    for (int i = 1; i <= q.size(); ++i) {
      CHECK(k0.coxeter_power(k0.projective(i), 1) == Int(-1) * k0.injective(i));
      CHECK(k0.coxeter_power(k0.coxeter_power(k0.projective(i), 3), -3) == k0.projective(i));
    }
  }
}
