#pragma once

#include <set>
#include <vector>

#include "qca/int.hpp"
#include "qca/quiver.hpp"

namespace qca::oracle {

// Number of paths i ~> j by depth-first search (the trivial path counts once).
std::vector<std::vector<long long>> dfs_path_counts(int n, const std::vector<Arrow>& arrows);

// Commutative seed with the cluster evaluated at a rational point.
struct ClassicalSeed {
  std::vector<std::vector<long long>> b;  // m x n
  std::vector<Rat> x;                    // m values
};

ClassicalSeed classical_initial(const std::vector<std::vector<long long>>& b, const std::vector<Rat>& point);
ClassicalSeed classical_mutate(const ClassicalSeed& s, int k);
ClassicalSeed classical_mutate_word(ClassicalSeed s, const std::vector<int>& word);

// Clusters reachable from s as unordered sets of mutable values (breadth-first, up to max_depth).
std::set<std::multiset<Rat>> classical_clusters(const ClassicalSeed& s, int max_depth);

// Number of k-dimensional subspaces of F_p^n, by enumerating spanning tuples.
long long brute_subspace_count(int n, int k, int p);

}  // namespace qca::oracle
