#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qca/torus.hpp"

namespace qca {

// (Lambda, B~) at some seed together with its cluster expressed in the initial torus.
struct QuantumSeed {
  IntMatrix lambda;                      // m x m, in the seed's own coordinates
  IntMatrix b;                           // m x n
  std::vector<TorusElement> vars;        // m variables, as elements of the initial torus
  std::vector<int> history;              // mutation word from the initial seed
  std::shared_ptr<const SkewForm> ambient;  // twist of the initial torus

  int total() const { return static_cast<int>(b.rows()); }
  int mutable_count() const { return static_cast<int>(b.cols()); }
};

QuantumSeed initial_seed(const IntMatrix& lambda, const IntMatrix& b);

struct MatrixPair {
  IntMatrix lambda;
  IntMatrix b;
  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};
MatrixPair matrix_mutation(const IntMatrix& lambda, const IntMatrix& b, int k, int sign = 1);

QuantumSeed mutate(const QuantumSeed& seed, int k);
QuantumSeed mutate_word(const QuantumSeed& seed, const std::vector<int>& word);
// Cancels adjacent repeated letters.
std::vector<int> reduce_word(const std::vector<int>& word);

// Seeds reached from a fixed initial seed, memoized on reduced words. Safe for concurrent use.
class ClusterCache {
 public:
  explicit ClusterCache(QuantumSeed initial);
  const QuantumSeed& initial() const { return initial_; }
  QuantumSeed seed_at(const std::vector<int>& word);
  TorusElement variable(const std::vector<int>& word, int i);
  std::size_t size() const;

 private:
  QuantumSeed initial_;
  mutable std::mutex mu_;
  std::map<std::vector<int>, std::shared_ptr<const QuantumSeed>> memo_;
};

TorusElement cluster_variable(const QuantumSeed& initial, const std::vector<int>& word, int i);

// The variable obtained from the initial seed by mutating at n, n-1, ..., k in that order.
TorusElement starred_variable(const QuantumSeed& initial, int k);

struct GVector {
  Exponent g;
  VPoly coefficient;
};
// The exponent g such that every other exponent lies in g + B~0 N^n.
GVector g_vector(const TorusElement& x, const IntMatrix& b0);

struct PositivityViolation {
  Exponent exponent;
  int v_power = 0;
  Int coefficient;
};
struct PositivityReport {
  bool bar_invariant = true;
  bool positive = true;
  std::vector<PositivityViolation> violations;
};
PositivityReport verify_laurent_positive(const TorusElement& x);

// Permutation s of 1..n with seed b's vertex s[i] playing the role of seed a's vertex i.
std::optional<std::vector<int>> seed_equivalence(const QuantumSeed& a, const QuantumSeed& b);

struct ExplorationEdge {
  int from = 0;
  int k = 0;
  int to = 0;
};

struct ExplorationGraph {
  std::vector<QuantumSeed> nodes;
  std::vector<ExplorationEdge> edges;
  std::vector<TorusElement> variables;  // distinct mutable cluster variables
  bool closed = false;                  // no edge leaves the node set
  int depth_reached = 0;
};

struct ExploreOptions {
  int depth = 0;
  std::size_t max_nodes = 10000;
};
ExplorationGraph explore(const QuantumSeed& seed, const ExploreOptions& opt);

}  // namespace qca
