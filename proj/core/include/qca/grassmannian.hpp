#pragma once

#include <cstdint>
#include <vector>

#include "qca/rep.hpp"

namespace qca {

struct GrassOptions {
  int max_dim = 16;          // cap on the total dimension of the module
  int extra_primes = 3;      // primes used only to verify the interpolation
  long max_points = 20000000;  // cap on enumerated subspace tuples per count
};

// Number of F_p-points of the Grassmannian of e-dimensional subrepresentations.
Int grass_count(const ModularRep& m, const std::vector<int>& e, const GrassOptions& opt = {});

// [n choose k]_q evaluated at q.
Int gaussian_binomial(int n, int k, const Int& q);

struct GrassPolynomial {
  std::vector<int> e;
  std::vector<Int> coeffs;  // coeffs[j] is the coefficient of q^j; empty for the empty Grassmannian
  std::vector<std::int64_t> primes;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int at(const Int& q) const;
};

// Point-count polynomial from counts over several good primes, verified on an extra prime.
GrassPolynomial grass_polynomial(const RationalRep& m, const std::vector<int>& e, const GrassOptions& opt = {});

// Good primes for m in increasing order: no denominator vanishes and End keeps its dimension.
std::vector<std::int64_t> good_primes(const RationalRep& m, std::size_t count);

}  // namespace qca
