#include "qca/mutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qca {

QuantumSeed initial_seed(const IntMatrix& lambda, const IntMatrix& b) {
  compatibility_check(lambda, b);
  QuantumSeed s;
  s.lambda = lambda;
  s.b = b;
  s.ambient = std::make_shared<const SkewForm>(lambda);
  const int m = static_cast<int>(b.rows());
  for (int i = 1; i <= m; ++i) s.vars.push_back(TorusElement::generator(m, i));
  return s;
}

MatrixPair matrix_mutation(const IntMatrix& lambda, const IntMatrix& b, int k, int sign) {
  const std::size_t m = b.rows(), n = b.cols();
  if (k < 1 || static_cast<std::size_t>(k) > n) throw Error("invalid_index", "mutation index out of range");
  if (sign != 1 && sign != -1) throw Error("invalid_input", "sign must be +1 or -1");
  const std::size_t c = k - 1;
  IntMatrix e = IntMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == c) e(i, c) = -1;
    else {
      Int x = -sign * b(i, c);
      e(i, c) = x > 0 ? x : Int(0);
    }
  }
  IntMatrix f = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == c) f(c, j) = -1;
    else {
      Int x = sign * b(c, j);
      f(c, j) = x > 0 ? x : Int(0);
    }
  }
  return {e.transpose() * lambda * e, e * b * f};
}

QuantumSeed mutate(const QuantumSeed& seed, int k) {
  const int m = seed.total(), n = seed.mutable_count();
  if (k < 1 || k > n)
    throw Error("invalid_index", "mutation index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  const SkewForm& amb = *seed.ambient;
  const int c = k - 1;
  std::vector<int> plus(m, 0), minus(m, 0);
  for (int i = 0; i < m; ++i) {
    int x = to_int(seed.b(i, c));
    if (x > 0) plus[i] = x;
    else minus[i] = -x;
  }
  // x_i(t) * x_j(t) = v^{2 Lambda_t(i,j)} x_j(t) * x_i(t)
  std::vector<std::vector<long long>> comm(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) comm[i][j] = 2 * to_ll(seed.lambda(i, j));
  auto prefactor = [&](const std::vector<int>& v) {
    long long s = 0;
    for (int j = 0; j < m; ++j) s += to_ll(seed.lambda(c, j)) * v[j];
    return static_cast<int>(s);
  };
  TorusElement r = normalized_monomial(seed.vars, plus, comm, amb).shifted(prefactor(plus));
  r += normalized_monomial(seed.vars, minus, comm, amb).shifted(prefactor(minus));
  TorusElement fresh = exact_left_divide(r, seed.vars[c], amb);
  if (fresh.bar() != fresh)
    throw Error("bar_invariance", "mutated variable at index " + std::to_string(k) + " is not bar-invariant");
  QuantumSeed out;
  auto mp = matrix_mutation(seed.lambda, seed.b, k, 1);
  out.lambda = std::move(mp.lambda);
  out.b = std::move(mp.b);
  out.vars = seed.vars;
  out.vars[c] = std::move(fresh);
  out.history = seed.history;
  out.history.push_back(k);
  out.ambient = seed.ambient;
  return out;
}

QuantumSeed mutate_word(const QuantumSeed& seed, const std::vector<int>& word) {
  QuantumSeed s = seed;
  for (int k : word) s = mutate(s, k);
  return s;
}

std::vector<int> reduce_word(const std::vector<int>& word) {
  std::vector<int> r;
  for (int k : word) {
    if (!r.empty() && r.back() == k) r.pop_back();
    else r.push_back(k);
  }
  return r;
}

ClusterCache::ClusterCache(QuantumSeed initial) : initial_(std::move(initial)) {}

QuantumSeed ClusterCache::seed_at(const std::vector<int>& word) {
  std::vector<int> w = reduce_word(word);
  std::shared_ptr<const QuantumSeed> start;
  std::size_t done = 0;
  {
    std::lock_guard lock(mu_);
    for (std::size_t len = w.size(); len > 0; --len) {
      auto it = memo_.find(std::vector<int>(w.begin(), w.begin() + len));
      if (it != memo_.end()) {
        start = it->second;
        done = len;
        break;
      }
    }
  }
  QuantumSeed s = start ? *start : initial_;
  for (std::size_t i = done; i < w.size(); ++i) {
    s = mutate(s, w[i]);
    auto stored = std::make_shared<const QuantumSeed>(s);
    std::lock_guard lock(mu_);
    memo_.try_emplace(std::vector<int>(w.begin(), w.begin() + i + 1), std::move(stored));
  }
  s.history = w;
  return s;
}

TorusElement ClusterCache::variable(const std::vector<int>& word, int i) {
  QuantumSeed s = seed_at(word);
  if (i < 1 || i > s.total()) throw Error("invalid_index", "variable index out of range");
  return s.vars[i - 1];
}

std::size_t ClusterCache::size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

TorusElement cluster_variable(const QuantumSeed& initial, const std::vector<int>& word, int i) {
  QuantumSeed s = mutate_word(initial, reduce_word(word));
  if (i < 1 || i > s.total()) throw Error("invalid_index", "variable index out of range");
  return s.vars[i - 1];
}

TorusElement starred_variable(const QuantumSeed& initial, int k) {
  const int n = initial.mutable_count();
  if (k < 1 || k > n) throw Error("invalid_index", "starred variable index out of range");
  std::vector<int> word;
  for (int j = n; j >= k; --j) word.push_back(j);
  return mutate_word(initial, word).vars[k - 1];
}

GVector g_vector(const TorusElement& x, const IntMatrix& b0) {
  if (x.is_zero()) throw Error("invalid_input", "zero element has no g-vector");
  auto pinv = left_inverse(b0);
  if (!pinv) throw Error("invalid_input", "exchange matrix does not have full column rank");
  const std::size_t m = b0.rows(), n = b0.cols();
  auto below = [&](const Exponent& g, const Exponent& h) {
    // h - g in B~0 N^n
    std::vector<Rat> coeff(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) coeff[j] += (*pinv)[j][i] * (h[i] - g[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (coeff[j] < 0 || coeff[j].get_den() != 1) return false;
    for (std::size_t i = 0; i < m; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += b0(i, j) * coeff[j].get_num();
      if (s != h[i] - g[i]) return false;
    }
    return true;
  };
  for (const auto& [g, c] : x.terms()) {
    bool pointed = true;
    for (const auto& [h, d] : x.terms()) {
      if (h != g && !below(g, h)) {
        pointed = false;
        break;
      }
    }
    if (pointed) {
      if (!c.is_unit()) throw Error("non_unit_extremal", "extremal coefficient " + c.to_string() + " is not a v-power");
      return {g, c};
    }
  }
  throw Error("not_pointed", "element has no extremal exponent with respect to the exchange matrix");
}

PositivityReport verify_laurent_positive(const TorusElement& x) {
  PositivityReport rep;
  rep.bar_invariant = x.bar() == x;
  for (const auto& [g, c] : x.terms())
    for (const auto& [k, a] : c.terms())
      if (a < 0) {
        rep.positive = false;
        rep.violations.push_back({g, k, a});
      }
  return rep;
}

std::optional<std::vector<int>> seed_equivalence(const QuantumSeed& a, const QuantumSeed& b) {
  const int m = a.total(), n = a.mutable_count();
  if (b.total() != m || b.mutable_count() != n) return std::nullopt;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int i = n; i < m; ++i)
    if (a.vars[i] != b.vars[i]) return std::nullopt;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    for (int j = 0; j < n; ++j)
      if (!used[j] && a.vars[i] == b.vars[j]) {
        found = j;
        break;
      }
    if (found < 0) return std::nullopt;
    used[found] = true;
    perm[i] = found;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a.lambda(i, j) != b.lambda(perm[i], perm[j])) return std::nullopt;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a.b(i, j) != b.b(perm[i], perm[j])) return std::nullopt;
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = perm[i] + 1;
  return out;
}

namespace {

std::vector<std::string> cluster_key(const QuantumSeed& s) {
  std::vector<std::string> key;
  for (int i = 0; i < s.mutable_count(); ++i) key.push_back(s.vars[i].to_string());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

ExplorationGraph explore(const QuantumSeed& seed, const ExploreOptions& opt) {
  if (opt.depth < 0) throw Error("invalid_input", "depth must be nonnegative");
  ExplorationGraph g;
  std::map<std::vector<std::string>, int> index;
  std::set<std::string> seen_vars;
  auto add_vars = [&](const QuantumSeed& s) {
    for (int i = 0; i < s.mutable_count(); ++i)
      if (seen_vars.insert(s.vars[i].to_string()).second) g.variables.push_back(s.vars[i]);
  };
  g.nodes.push_back(seed);
  index[cluster_key(seed)] = 0;
  add_vars(seed);
  std::vector<int> frontier{0};
  for (int d = 0; d < opt.depth && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int from : frontier) {
      for (int k = 1; k <= seed.mutable_count(); ++k) {
        QuantumSeed s = mutate(g.nodes[from], k);
        auto key = cluster_key(s);
        auto it = index.find(key);
        if (it != index.end()) {
          if (!seed_equivalence(g.nodes[it->second], s))
            throw Error("internal", "seeds with equal clusters have inequivalent matrices");
          g.edges.push_back({from, k, it->second});
          continue;
        }
        if (g.nodes.size() >= opt.max_nodes) throw Error("resource_cap", "exploration exceeded the node cap");
        int id = static_cast<int>(g.nodes.size());
        index[key] = id;
        add_vars(s);
        g.nodes.push_back(std::move(s));
        g.edges.push_back({from, k, id});
        next.push_back(id);
      }
    }
    g.depth_reached = d + 1;
    frontier = std::move(next);
  }
  // closed when mutating the last frontier produces nothing new
  g.closed = true;
  for (int from : frontier)
    for (int k = 1; k <= seed.mutable_count() && g.closed; ++k)
      if (!index.count(cluster_key(mutate(g.nodes[from], k)))) g.closed = false;
  return g;
}

}  // namespace qca
