#include "qca/quiver.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace qca {

namespace {
void check_vertex(int v, int n, const char* what) {
  if (v < 1 || v > n)
    throw Error("invalid_input", std::string(what) + ": vertex " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(n));
}
}  // namespace

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n < 0) throw Error("invalid_input", "negative vertex count");
  for (const auto& a : arrows_) {
    check_vertex(a.source, n, "quiver");
    check_vertex(a.target, n, "quiver");
    if (a.source == a.target) throw Error("invalid_input", "loop at vertex " + std::to_string(a.source));
    if (a.source > a.target)
      throw Error("invalid_input", "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                                       " violates admissible numbering (need source < target)");
  }
}

int Quiver::arrow_count(int i, int j) const {
  return static_cast<int>(std::count(arrows_.begin(), arrows_.end(), Arrow{i, j}));
}

IntMatrix Quiver::exchange_matrix() const {
  IntMatrix b(n_, n_);
  for (const auto& a : arrows_) {
    b(a.source - 1, a.target - 1) += 1;
    b(a.target - 1, a.source - 1) -= 1;
  }
  return b;
}

Renumbering admissible_renumbering(int n, const std::vector<Arrow>& arrows) {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& a : arrows) {
    check_vertex(a.source, n, "renumbering");
    check_vertex(a.target, n, "renumbering");
    out[a.source].push_back(a.target);
    ++indeg[a.target];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int t : out[v])
      if (--indeg[t] == 0) ready.push(t);
  }
  if (static_cast<int>(order.size()) != n) throw Error("invalid_input", "quiver has an oriented cycle");
  std::vector<int> label(n + 1);
  for (int k = 0; k < n; ++k) label[order[k]] = k + 1;
  std::vector<Arrow> renamed;
  for (const auto& a : arrows) renamed.push_back({label[a.source], label[a.target]});
  return {Quiver(n, std::move(renamed)), order};
}

IceQuiver::IceQuiver(int m, int n, std::vector<Arrow> arrows) : m_(m), n_(n), arrows_(std::move(arrows)) {
  if (n < 0 || m < n) throw Error("invalid_input", "ice quiver needs 0 <= n <= m");
  for (const auto& a : arrows_) {
    check_vertex(a.source, m, "ice quiver");
    check_vertex(a.target, m, "ice quiver");
    if (a.source == a.target) throw Error("invalid_input", "loop at vertex " + std::to_string(a.source));
  }
}

bool IceQuiver::has_frozen_frozen_arrow() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source > n_ && a.target > n_; });
}

IceQuiver build_z(const Quiver& q, int level) {
  if (level < 1) throw Error("invalid_input", "level must be positive");
  const int n = q.size();
  auto vertex = [n](int i, int d) { return i + (d - 1) * n; };
  std::vector<Arrow> arrows;
  for (int d = 1; d <= level; ++d) {
    for (const auto& a : q.arrows()) arrows.push_back({vertex(a.source, d), vertex(a.target, d)});
    for (int i = 1; i <= n; ++i) arrows.push_back({vertex(i, d), vertex(i, d + 1)});
    for (const auto& a : q.arrows()) arrows.push_back({vertex(a.target, d + 1), vertex(a.source, d)});
  }
  return IceQuiver(n * (level + 1), n * level, std::move(arrows));
}

IntMatrix full_b_matrix(const IceQuiver& iq) {
  IntMatrix b(iq.total(), iq.total());
  for (const auto& a : iq.arrows()) {
    b(a.source - 1, a.target - 1) += 1;
    b(a.target - 1, a.source - 1) -= 1;
  }
  return b;
}

IntMatrix b_matrix(const IceQuiver& iq) { return full_b_matrix(iq).block(0, 0, iq.total(), iq.mutable_count()); }

IntMatrix b_matrix(const Quiver& q) { return q.exchange_matrix(); }

IntMatrix lambda_z(const IceQuiver& iq) {
  IntMatrix b = full_b_matrix(iq);
  auto inv = integer_inverse(b);
  if (!inv)
    throw Error("not_invertible", "signed adjacency matrix has no integral inverse (determinant " +
                                      determinant(b).get_str() + ")");
  return -*inv;
}

IntMatrix path_count_matrix(const Quiver& q) {
  const int n = q.size();
  IntMatrix p(n, n);
  for (int i = 0; i < n; ++i) p(i, i) = 1;
  // arrows go from smaller to larger labels, so targets can be filled in increasing order
  for (int j = 1; j <= n; ++j)
    for (const auto& a : q.arrows())
      if (a.target == j)
        for (int i = 1; i <= n; ++i) p(i - 1, j - 1) += p(i - 1, a.source - 1);
  return p;
}

K0Class K0Class::from(const std::vector<long long>& c) {
  K0Class x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) x.c_[i] = Int(static_cast<long>(c[i]));
  return x;
}

K0Class K0Class::simple(std::size_t n, int i) {
  K0Class x(n);
  x.c_.at(i - 1) = 1;
  return x;
}

K0Class& K0Class::operator+=(const K0Class& o) {
  if (o.size() != size()) throw Error("dimension_mismatch", "K0 classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& o) {
  if (o.size() != size()) throw Error("dimension_mismatch", "K0 classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

K0Class operator*(const Int& k, K0Class a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

Grothendieck::Grothendieck(const Quiver& q) : q_(q) {
  const int n = q.size();
  e_ = IntMatrix::identity(n);
  for (const auto& a : q.arrows()) e_(a.source - 1, a.target - 1) -= 1;
  // <x, c y> = -<y, x> forces c = -E^{-1} E^T
  auto einv = integer_inverse(e_);
  if (!einv) throw Error("internal", "Euler matrix not unimodular");
  c_ = -(*einv * e_.transpose());
  auto etinv = integer_inverse(e_.transpose());
  cinv_ = -(*etinv * e_);
}

Int Grothendieck::euler(const K0Class& d, const K0Class& e) const {
  if (d.size() != static_cast<std::size_t>(size()) || e.size() != d.size())
    throw Error("dimension_mismatch", "K0 class rank mismatch");
  Int s = 0;
  for (int i = 0; i < size(); ++i) s += d[i] * e[i];
  for (const auto& a : q_.arrows()) s -= d[a.source - 1] * e[a.target - 1];
  return s;
}

Int Grothendieck::symmetric(const K0Class& x, const K0Class& y) const { return euler(x, y) + euler(y, x); }

Int Grothendieck::antisymmetric(const K0Class& x, const K0Class& y) const { return euler(x, y) - euler(y, x); }

K0Class Grothendieck::coxeter_power(const K0Class& x, int k) const {
  const IntMatrix& m = k >= 0 ? c_ : cinv_;
  K0Class y = x;
  for (int s = 0; s < (k >= 0 ? k : -k); ++s) y = K0Class(m * y.coords());
  return y;
}

K0Class Grothendieck::projective(int i) const {
  // dim P_i at j = number of paths i -> j
  IntMatrix p = path_count_matrix(q_);
  K0Class x(size());
  for (int j = 0; j < size(); ++j) x[j] = p(i - 1, j);
  return x;
}

K0Class Grothendieck::injective(int i) const {
  IntMatrix p = path_count_matrix(q_);
  K0Class x(size());
  for (int j = 0; j < size(); ++j) x[j] = p(j, i - 1);
  return x;
}

Int euler_form(const Quiver& q, const K0Class& d, const K0Class& e) { return Grothendieck(q).euler(d, e); }

K0Class coxeter_power(const Quiver& q, const K0Class& x, int k) { return Grothendieck(q).coxeter_power(x, k); }

}  // namespace qca
