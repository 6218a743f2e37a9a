#include <thread>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "qca/bases.hpp"

using namespace qca;
using namespace testing;

TEST_CASE("mutation is an involution on seeds") {
  for (const Quiver& q : {a2(), a3(), triangle(), kronecker()}) {
    QuantumSeed s = z_seed(q);
    for (int k = 1; k <= q.size(); ++k) {
      QuantumSeed t = mutate(mutate(s, k), k);
      CHECK(t.vars == s.vars);
      CHECK(t.lambda == s.lambda);
      CHECK(t.b == s.b);
    }
  }
}

TEST_CASE("matrix mutation: sign independence, involution, constant D on random walks") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    Quiver q = random_quiver(rng, 1 + t % 4);
    QuantumSeed s = t % 2 ? setting_seed(q, Setting::L) : z_seed(q);
    const auto d = compatibility_check(s.lambda, s.b);
    MatrixPair cur{s.lambda, s.b};
    for (int step = 0; step < 8; ++step) {
      int k = 1 + static_cast<int>(rng() % q.size());
      MatrixPair p = matrix_mutation(cur.lambda, cur.b, k, 1);
      CHECK(p == matrix_mutation(cur.lambda, cur.b, k, -1));
      CHECK(matrix_mutation(p.lambda, p.b, k) == cur);
      CHECK(compatibility_check(p.lambda, p.b) == d);
      cur = p;
    }
  }
}

TEST_CASE("quantum pentagon") {
  QuantumSeed s = z_seed(a2());
  QuantumSeed t = mutate_word(s, {1, 2, 1, 2, 1});
  auto perm = seed_equivalence(s, t);
  REQUIRE(perm.has_value());
  CHECK(*perm == std::vector<int>{2, 1});
  CHECK(t.vars[0] == s.vars[1]);
  CHECK(t.vars[1] == s.vars[0]);
  CHECK(mutate_word(s, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}).vars == s.vars);
}

TEST_CASE("exchange graphs of finite type") {
  CHECK(explore(z_seed(a1()), {10, 100}).nodes.size() == 2);
  CHECK(explore(z_seed(a2()), {10, 100}).nodes.size() == 5);
  auto g3 = explore(z_seed(a3()), {20, 1000});
  CHECK(g3.closed);
  CHECK(g3.nodes.size() == 14);
  CHECK(g3.variables.size() == 9);
  CHECK(explore(setting_seed(a3(), Setting::L), {20, 1000}).nodes.size() == 14);
  // acyclic triangle: affine type, infinitely many clusters
  CHECK_FALSE(explore(z_seed(triangle()), {5, 1000}).closed);
  auto kr = explore(z_seed(kronecker()), {6, 1000});
  CHECK_FALSE(kr.closed);
  CHECK_THROWS_AS(explore(z_seed(kronecker()), {30, 10}), Error);
}

TEST_CASE("v = 1 agrees with an independent commutative recursion") {
  std::mt19937_64 rng(32);
  for (const Quiver& q : {a2(), a3(), triangle(), kronecker()}) {
    QuantumSeed s = z_seed(q);
    auto pt = random_point(rng, s.total());
    auto base = oracle::classical_initial(s.b.to_ll(), pt);
    for (int t = 0; t < 10; ++t) {
      std::vector<int> word;
      for (int i = 0; i < 6; ++i) word.push_back(1 + static_cast<int>(rng() % q.size()));
      QuantumSeed r = mutate_word(s, word);
      auto c = oracle::classical_mutate_word(base, word);
      CHECK(r.b.to_ll() == c.b);
      for (int i = 0; i < r.total(); ++i) CHECK(evaluate_classical(r.vars[i], pt) == c.x[i]);
    }
  }
  auto clusters = oracle::classical_clusters(oracle::classical_initial(z_seed(a3()).b.to_ll(), random_point(rng, 6)), 20);
  CHECK(clusters.size() == 14);
}

TEST_CASE("cluster variables are bar-invariant, Laurent-positive, with unit extremal coefficients") {
  for (const Quiver& q : {a2(), a3(), triangle()}) {
    auto g = explore(z_seed(q), {6, 1000});
    for (const auto& x : g.variables) {
      auto r = verify_laurent_positive(x);
      CHECK(r.bar_invariant);
      CHECK(r.positive);
      CHECK(r.violations.empty());
      CHECK(g_vector(x, g.nodes[0].b).coefficient == VPoly(1));
    }
  }
  auto kr = explore(z_seed(kronecker()), {4, 1000});
  for (const auto& x : kr.variables) CHECK(verify_laurent_positive(x).positive);
}

TEST_CASE("g-vectors of initial variables are unit vectors") {
  QuantumSeed s = z_seed(a3());
  for (int i = 0; i < s.total(); ++i) {
    Exponent e(s.total(), 0);
    e[i] = 1;
    CHECK(g_vector(s.vars[i], s.b).g == e);
  }
}

TEST_CASE("reduced words and the memo table") {
  CHECK(reduce_word({1, 2, 2, 1, 3}) == std::vector<int>{3});
  CHECK(reduce_word({1, 2, 1}) == std::vector<int>{1, 2, 1});
  ClusterCache cache(z_seed(a3()));
  std::vector<std::thread> workers;
  std::vector<TorusElement> got(8);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] { got[t] = cache.variable(t % 2 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2, 3, 3, 3}, 3); });
  for (auto& w : workers) w.join();
  for (const auto& x : got) CHECK(x == got[0]);
  CHECK(got[0] == cluster_variable(z_seed(a3()), {1, 2, 3}, 3));
}

TEST_CASE("invalid mutation index") {
  QuantumSeed s = z_seed(a2());
  CHECK_THROWS_AS(mutate(s, 0), Error);
  CHECK_THROWS_AS(mutate(s, 3), Error);
}
