#pragma once

#include <string>
#include <vector>

#include "qca/bases.hpp"

namespace qca {

// Exchange relation x_k* x_k in the L seed, checked in several readings.
struct TSystemReport {
  int k = 0;
  long long l_frozen = 0;   // L(e_{n+k}, e_k)
  long long l_product = 0;  // L(sum b_ik e_i + sum b_kj e_{j+n}, e_k)
  // x_k* x_k = v^{l_frozen} x_{n+k} + v^{l_product} (product taken left to right)
  bool literal = false;
  // v^{-l_frozen-2} x_k* x_k = v^{-2} x_{n+k} + product, product left to right
  bool rescaled_literal = false;
  // same with the product replaced by the bar-invariant normalized monomial
  bool rescaled_normalized = false;
  bool l_plus_two = false;    // l_frozen + 2 == l_product
  bool classical = false;     // v -> 1 gives the classical exchange relation
  // l_frozen against (beta(e_k(-1)), beta(e_k(0))); expanding N on its defining values gives the + sign
  bool frozen_pairing = false;       // l_frozen == +(beta(e_k(-1)), beta(e_k(0)))
  bool frozen_pairing_minus = false;  // l_frozen == -(beta(e_k(-1)), beta(e_k(0)))
  bool beta_balance = false;    // sum b_ik beta(e_i(0)) + sum b_kj beta(e_j(-1)) == beta(e_k(-1)) + beta(e_k(0))
  TorusElement lhs;              // x_k* x_k
  TorusElement normalized_rhs;   // right side of the normalized reading, scaled back to match lhs
  bool passed() const { return rescaled_normalized && classical && frozen_pairing && beta_balance; }
};

TSystemReport verify_cluster_tsystem(const Quiver& q, int k);

struct LPermutationReport {
  bool solvable = false;  // the unprescribed entries are forced by L~(-B~) = [2 1; 0]
  int prescribed = 0;     // entries fixed by the pairing prescriptions
  int mismatched = 0;     // entries of L differing from the permuted L~
  IntMatrix l_tilde;
  bool passed() const { return solvable && mismatched == 0; }
};

LPermutationReport check_l_permutation(const Quiver& q);

}  // namespace qca
