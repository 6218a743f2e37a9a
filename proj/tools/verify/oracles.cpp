#include "oracles.hpp"

#include <functional>
#include <map>
#include <queue>

namespace qca::oracle {

std::vector<std::vector<long long>> dfs_path_counts(int n, const std::vector<Arrow>& arrows) {
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& a : arrows) out[a.source].push_back(a.target);
  std::vector<std::vector<long long>> p(n, std::vector<long long>(n, 0));
  std::function<void(int, int)> walk = [&](int start, int at) {
    ++p[start - 1][at - 1];
    for (int t : out[at]) walk(start, t);
  };
  for (int i = 1; i <= n; ++i) walk(i, i);
  return p;
}

ClassicalSeed classical_initial(const std::vector<std::vector<long long>>& b, const std::vector<Rat>& point) {
  return {b, point};
}

ClassicalSeed classical_mutate(const ClassicalSeed& s, int k) {
  const std::size_t m = s.b.size(), n = m ? s.b[0].size() : 0;
  const std::size_t kk = k - 1;
  ClassicalSeed r = s;
  Rat plus = 1, minus = 1;
  for (std::size_t i = 0; i < m; ++i) {
    long long e = s.b[i][kk];
    for (long long t = 0; t < e; ++t) plus *= s.x[i];
    for (long long t = 0; t < -e; ++t) minus *= s.x[i];
  }
  r.x[kk] = (plus + minus) / s.x[kk];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == kk || j == kk) {
        r.b[i][j] = -s.b[i][j];
        continue;
      }
      long long a = s.b[i][kk], c = s.b[kk][j];
      // b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
      r.b[i][j] = s.b[i][j] + ((a < 0 ? -a : a) * c + a * (c < 0 ? -c : c)) / 2;
    }
  return r;
}

ClassicalSeed classical_mutate_word(ClassicalSeed s, const std::vector<int>& word) {
  for (int k : word) s = classical_mutate(s, k);
  return s;
}

std::set<std::multiset<Rat>> classical_clusters(const ClassicalSeed& s, int max_depth) {
  const int n = s.b.empty() ? 0 : static_cast<int>(s.b[0].size());
  auto key = [n](const ClassicalSeed& t) { return std::multiset<Rat>(t.x.begin(), t.x.begin() + n); };
  std::set<std::multiset<Rat>> seen{key(s)};
  std::queue<std::pair<ClassicalSeed, int>> todo;
  todo.push({s, 0});
  while (!todo.empty()) {
    auto [cur, d] = todo.front();
    todo.pop();
    if (d == max_depth) continue;
    for (int k = 1; k <= n; ++k) {
      ClassicalSeed next = classical_mutate(cur, k);
      if (seen.insert(key(next)).second) todo.push({next, d + 1});
    }
  }
  return seen;
}

namespace {

int rank_mod(std::vector<std::vector<int>> rows, int p) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] % p) piv = i;
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    int inv = 1;
    while (rows[r][c] * inv % p != 1) ++inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      int f = rows[i][c] * inv % p;
      for (int j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// number of k-tuples of vectors in F_p^n that are linearly independent
long long independent_tuples(int n, int k, int p) {
  long long total = 1;
  for (int i = 0; i < n * k; ++i) total *= p;
  long long count = 0;
  std::vector<int> digits(n * k, 0);
  for (long long t = 0; t < total; ++t) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(n));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = digits[i * n + j];
    if (rank_mod(rows, p) == k) ++count;
    for (int d = 0; d < n * k && ++digits[d] == p; ++d) digits[d] = 0;
  }
  return count;
}

}  // namespace

long long brute_subspace_count(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  return independent_tuples(n, k, p) / independent_tuples(k, k, p);
}

}  // namespace qca::oracle
