#include "doctest.h"
#include "helpers.hpp"
#include "qca/bases.hpp"
#include "qca/forms.hpp"

using namespace qca;
using namespace testing;

namespace {

GradedVector random_graded(std::mt19937_64& rng, int n, bool odd) {
  std::uniform_int_distribution<int> deg(-4, 3), val(-2, 3), vert(1, n);
  GradedVector v;
  for (int e = 0; e < 4; ++e) v.add(vert(rng), 2 * deg(rng) + (odd ? 1 : 0), val(rng));
  return v;
}

}  // namespace

TEST_CASE("L and N matrices of A3") {
  Forms f(a3());
  CHECK(f.l_matrix() == IntMatrix::from_rows({{0, 0, 1, 1, -1, 0},
                                              {0, 0, 1, -1, 1, 0},
                                              {-1, -1, 0, 0, 0, 0},
                                              {-1, 1, 0, 0, 0, 0},
                                              {1, -1, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 0, 0}}));
  CHECK(f.n_matrix() == IntMatrix::from_rows({{0, 0, 1, 1, -1, -1},
                                              {0, 0, 1, -1, 1, -1},
                                              {-1, -1, 0, 1, 1, 0},
                                              {-1, 1, -1, 0, 0, 1},
                                              {1, -1, -1, 0, 0, 1},
                                              {1, 1, 0, -1, -1, 0}}));
  CHECK(compatibility_check(f.l_matrix(), b_matrix(build_z(a3(), 1))) == std::vector<Int>(3, 2));
}

TEST_CASE("recursive and Euler inverses of C_q agree and invert C_q below the window edge") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 12; ++t) {
    // simply laced: dense multiple arrows overflow 64 bits inside this window (checked below)
    Quiver q = t < 3 ? std::vector<Quiver>{a3(), triangle(), kronecker()}[t] : random_quiver(rng, 1 + t % 4, 1);
    QCartan c(q);
    for (int k = 1; k <= q.size(); ++k)
      for (int a = -5; a <= 5; ++a) {
        auto r = c.inverse_recursive(k, 2 * a, 16);
        CHECK(r == c.inverse_euler(k, 2 * a, 16));
        GradedVector low, back = c.apply(r);
        for (const auto& [key, v] : back.entries())
          if (key.deg2 < 12) low.add(key.vertex, key.deg2, v);
        CHECK(low == GradedVector::unit(k, 2 * a));
      }
  }
}

TEST_CASE("C_q^{-1} reports overflow instead of wrapping") {
  Quiver dense(4, {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 4}, {3, 4}, {3, 4}});
  try {
    QCartan(dense).inverse_recursive(1, -10, 16);
    FAIL("expected an overflow error");
  } catch (const Error& e) {
    CHECK(e.code() == "overflow");
  }
}

TEST_CASE("C_q^{-1} of type A is periodic with period the Coxeter number") {
  for (const Quiver& q : {a2(), a3()}) {
    const int h2 = 2 * (q.size() + 1);  // h in doubled degrees
    QCartan c(q);
    for (int k = 1; k <= q.size(); ++k) {
      auto x = c.inverse_euler(k, 0, 40);
      CHECK_FALSE(x.nonnegative());
      for (int i = 1; i <= q.size(); ++i)
        for (int d = 0; d + h2 < 40; ++d) CHECK(x.get(i, d + h2) == x.get(i, d));
    }
  }
}

TEST_CASE("beta kills the image of C_q") {
  std::mt19937_64 rng(42);
  for (const Quiver& q : {a2(), a3(), triangle(), kronecker()}) {
    Forms f(q);
    for (int t = 0; t < 50; ++t) CHECK(f.beta(f.cartan().apply(random_graded(rng, q.size(), true))) == K0Class(q.size()));
  }
}

TEST_CASE("the z-pattern twist and L realize E' and N on level-1 indices") {
  for (const Quiver& q : {a2(), a3(), triangle(), kronecker()}) {
    Forms f(q);
    SkewForm lam(lambda_z(build_z(q, 1))), l(f.l_matrix());
    std::vector<GradedVector> basis;
    for (int i = 1; i <= q.size(); ++i) {
      basis.push_back(GradedVector::unit(i, 0));
      basis.push_back(GradedVector::unit(i, -2));
    }
    for (const auto& x : basis)
      for (const auto& y : basis) {
        CHECK(lam.eval(f.ind(x), f.ind(y)) == -f.e_prime(x, y));
        CHECK(l.eval(f.ind(x), f.ind(y)) == f.n_form(x, y));
      }
  }
}

TEST_CASE("ind and w_from_g are inverse on level-1 vectors") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(0, 3);
  for (const Quiver& q : {a3(), triangle()}) {
    Forms f(q);
    for (int t = 0; t < 30; ++t) {
      std::vector<long long> a(3), b(3);
      for (int i = 0; i < 3; ++i) a[i] = d(rng), b[i] = d(rng);
      WVector w = WVector::level1(a, b);
      auto back = f.w_from_g(f.ind(w.graded()));
      REQUIRE(back.has_value());
      CHECK(*back == w);
    }
  }
}

TEST_CASE("graded vectors: shifts and doubled degrees") {
  GradedVector v = GradedVector::unit(2, -1, 3);
  CHECK(v.get(2, -1) == 3);
  CHECK(v.shifted(2).get(2, -3) == 3);
  CHECK((v - v).is_zero());
  CHECK(WVector::unit(1, -1).at(1, -1) == 1);
  CHECK(WVector::level1({1, 0}, {0, 2}).size() == 3);
  CHECK(WVector::level1({1, 0}, {0, 2}).is_level1());
}

TEST_CASE("coefficient split recovers w") {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> d(0, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<long long> a(3), b(3);
    for (int i = 0; i < 3; ++i) a[i] = d(rng), b[i] = d(rng);
    WVector w = WVector::level1(a, b);
    auto sp = coefficient_split(w);
    CHECK(sp.free_part + sp.coefficient_part == w);
  }
}
