#pragma once

#include <random>
#include <vector>

#include "qca/mutation.hpp"
#include "qca/quiver.hpp"

namespace testing {

inline qca::Quiver a1() { return qca::Quiver(1, {}); }
inline qca::Quiver a2() { return qca::Quiver(2, {{1, 2}}); }
inline qca::Quiver a3() { return qca::Quiver(3, {{1, 3}, {2, 3}}); }
inline qca::Quiver a3_linear() { return qca::Quiver(3, {{1, 2}, {2, 3}}); }
inline qca::Quiver triangle() { return qca::Quiver(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline qca::Quiver kronecker() { return qca::Quiver(2, {{1, 2}, {1, 2}}); }

inline qca::QuantumSeed z_seed(const qca::Quiver& q, int level = 1) {
  qca::IceQuiver iq = qca::build_z(q, level);
  return qca::initial_seed(qca::lambda_z(iq), qca::b_matrix(iq));
}

// Random admissibly numbered quiver with up to max_mult parallel arrows per pair.
inline qca::Quiver random_quiver(std::mt19937_64& rng, int n, int max_mult = 2) {
  std::vector<qca::Arrow> arrows;
  std::uniform_int_distribution<int> mult(0, max_mult);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int t = mult(rng); t > 0; --t) arrows.push_back({i, j});
  return qca::Quiver(n, arrows);
}

inline std::vector<qca::Rat> random_point(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  std::vector<qca::Rat> p(m);
  for (auto& x : p) {
    x = qca::Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return p;
}

}  // namespace testing
