#pragma once

#include <vector>

#include "qca/quiver.hpp"

namespace qca {

using RootVector = std::vector<long long>;  // coordinates in simple roots

// A weight written as lambda - sum r_i alpha_i, lambda in fundamental-weight coordinates.
struct Weight {
  std::vector<long long> fundamental;
  RootVector displacement;
  friend bool operator==(const Weight&, const Weight&) = default;
};

class RootDatum {
 public:
  explicit RootDatum(const Quiver& q);
  explicit RootDatum(const IntMatrix& cartan);

  int rank() const { return static_cast<int>(c_.size()); }
  long long cartan(int i, int j) const { return c_[i - 1][j - 1]; }

  // (x, y) for root-lattice vectors
  long long form(const RootVector& x, const RootVector& y) const;
  // (x, lambda) for x in the root lattice
  long long pairing(const RootVector& x, const Weight& lambda) const;
  long long pairing(const RootVector& x, const std::vector<long long>& fundamental) const;

  RootVector reflect(int i, RootVector x) const;
  Weight reflect(int i, Weight mu) const;
  // word (i_1, ..., i_k) acts as s_{i_1} ... s_{i_k}
  RootVector act(const std::vector<int>& word, RootVector x) const;
  Weight act(const std::vector<int>& word, Weight mu) const;

  RootVector simple_root(int i) const;
  Weight fundamental_weight(int i) const;

  std::vector<RootVector> beta_sequence(const std::vector<int>& word) const;
  bool is_reduced(const std::vector<int>& word) const;
  // l(w s_i) = l(w) + 1 for w given by a reduced word
  bool extends_length(const std::vector<int>& word, int i) const;

 private:
  std::vector<std::vector<long long>> c_;
};

bool is_positive_root_vector(const RootVector& x);

struct TExponents {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const TExponents&, const TExponents&) = default;
};

// A = (w1 pi_i - w2 pi_i, w2 s_i pi_i), B = (w1 pi_i - w2 s_i pi_i, w2 pi_i).
TExponents tsys_exponents(const RootDatum& rd, const std::vector<int>& w1, const std::vector<int>& w2, int i);

// Exponents of the relation for the minors D[a,b] D[a-, b-] of a reduced word (1-based positions).
TExponents tsys_for_minors(const RootDatum& rd, const std::vector<int>& word, int a, int b);

// The word (n, ..., 1, n, ..., 1) of the square of the Coxeter element.
std::vector<int> coxeter_square_word(int n);

// A = -1 - (beta_{xi(k)}, beta_{xi(k)+n}) through the Euler form, B = 0.
TExponents tsys_exponents_euler(const Quiver& q, int k);

}  // namespace qca
