#include "qca/graded.hpp"

#include <algorithm>

namespace qca {

GradedVector GradedVector::unit(int vertex, int deg2, long long value) {
  GradedVector g;
  g.add(vertex, deg2, value);
  return g;
}

long long GradedVector::get(int vertex, int deg2) const {
  auto it = e_.find({vertex, deg2});
  return it == e_.end() ? 0 : it->second;
}

void GradedVector::add(int vertex, int deg2, long long value) {
  if (value == 0) return;
  auto [it, inserted] = e_.try_emplace(GradedKey{vertex, deg2}, value);
  if (!inserted) {
    it->second = checked_add(it->second, value);
    if (it->second == 0) e_.erase(it);
  }
}

bool GradedVector::nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](const auto& kv) { return kv.second >= 0; });
}

int GradedVector::min_deg2() const {
  if (e_.empty()) throw Error("invalid_input", "empty graded vector has no degree");
  int d = e_.begin()->first.deg2;
  for (const auto& kv : e_) d = std::min(d, kv.first.deg2);
  return d;
}

int GradedVector::max_deg2() const {
  if (e_.empty()) throw Error("invalid_input", "empty graded vector has no degree");
  int d = e_.begin()->first.deg2;
  for (const auto& kv : e_) d = std::max(d, kv.first.deg2);
  return d;
}

long long GradedVector::total() const {
  long long s = 0;
  for (const auto& kv : e_) s = checked_add(s, kv.second);
  return s;
}

GradedVector GradedVector::shifted(int s2) const {
  GradedVector r;
  for (const auto& [k, x] : e_) r.e_.emplace(GradedKey{k.vertex, k.deg2 - s2}, x);
  return r;
}

long long GradedVector::dot(const GradedVector& o) const {
  const auto& small = e_.size() <= o.e_.size() ? e_ : o.e_;
  const auto& large = e_.size() <= o.e_.size() ? o.e_ : e_;
  long long s = 0;
  for (const auto& [k, x] : small) {
    auto it = large.find(k);
    if (it != large.end()) s = checked_add(s, checked_mul(x, it->second));
  }
  return s;
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  for (const auto& [k, x] : o.e_) add(k.vertex, k.deg2, x);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  for (const auto& [k, x] : o.e_) add(k.vertex, k.deg2, -x);
  return *this;
}

GradedVector operator*(long long k, const GradedVector& a) {
  GradedVector r;
  if (k == 0) return r;
  for (const auto& [key, x] : a.e_) r.e_.emplace(key, checked_mul(k, x));
  return r;
}

WVector::WVector(GradedVector g) : g_(std::move(g)) {
  for (const auto& [k, x] : g_.entries()) {
    if (k.deg2 % 2 != 0) throw Error("invalid_input", "w-vector entries must sit in integer degrees");
    if (x < 0) throw Error("invalid_input", "w-vector entries must be nonnegative");
  }
}

WVector WVector::level1(const std::vector<long long>& at_minus1, const std::vector<long long>& at_zero) {
  if (at_minus1.size() != at_zero.size()) throw Error("dimension_mismatch", "level-1 parts differ in length");
  GradedVector g;
  for (std::size_t i = 0; i < at_zero.size(); ++i) {
    g.add(static_cast<int>(i) + 1, -2, at_minus1[i]);
    g.add(static_cast<int>(i) + 1, 0, at_zero[i]);
  }
  return WVector(std::move(g));
}

bool WVector::is_level1() const {
  return std::all_of(g_.entries().begin(), g_.entries().end(),
                     [](const auto& kv) { return kv.first.deg2 == 0 || kv.first.deg2 == -2; });
}

VHalfVector::VHalfVector(GradedVector g) : g_(std::move(g)) {
  for (const auto& [k, x] : g_.entries()) {
    if (k.deg2 % 2 == 0) throw Error("invalid_input", "v-vector entries must sit in half-integer degrees");
    if (x < 0) throw Error("invalid_input", "v-vector entries must be nonnegative");
  }
}

VHalfVector VHalfVector::at_minus_half(const std::vector<long long>& v) {
  GradedVector g;
  for (std::size_t i = 0; i < v.size(); ++i) g.add(static_cast<int>(i) + 1, -1, v[i]);
  return VHalfVector(std::move(g));
}

QCartan::QCartan(const Quiver& q) : q_(q), b_(static_cast<std::size_t>(q.size()) * q.size(), 0) {
  const int n = q.size();
  for (const auto& a : q.arrows()) {
    b_[(a.source - 1) * n + (a.target - 1)] += 1;
    b_[(a.target - 1) * n + (a.source - 1)] -= 1;
  }
}

GradedVector QCartan::apply(const GradedVector& eta) const {
  const int n = size();
  GradedVector out;
  for (const auto& [key, x] : eta.entries()) {
    const int m = key.vertex, d = key.deg2;
    if (m < 1 || m > n) throw Error("invalid_input", "vertex out of range in graded vector");
    out.add(m, d - 1, x);
    out.add(m, d + 1, x);
    for (int k = m + 1; k <= n; ++k) out.add(k, d - 1, -checked_mul(b(m, k), x));
    for (int k = 1; k < m; ++k) out.add(k, d + 1, -checked_mul(b(k, m), x));
  }
  return out;
}

GradedVector QCartan::forward(const GradedVector& target, int from2, int top2) const {
  const int n = size();
  GradedVector eta;
  for (int d = from2; d + 1 <= top2; d += 2) {
    for (int j = 1; j <= n; ++j) {
      long long x = target.get(j, d) - eta.get(j, d - 1);
      for (int i = 1; i < j; ++i) x = checked_add(x, checked_mul(b(i, j), eta.get(i, d + 1)));
      for (int l = j + 1; l <= n; ++l) x = checked_add(x, checked_mul(b(j, l), eta.get(l, d - 1)));
      eta.add(j, d + 1, x);
    }
  }
  return eta;
}

std::optional<GradedVector> QCartan::solve(const GradedVector& target) const {
  if (target.is_zero()) return GradedVector{};
  const int lo = target.min_deg2(), hi = target.max_deg2();
  for (const auto& kv : target.entries())
    if ((kv.first.deg2 - lo) % 2 != 0) return std::nullopt;
  GradedVector eta = forward(target, lo, hi - 1);
  if (apply(eta) != target) return std::nullopt;
  return eta;
}

GradedVector QCartan::inverse_recursive(int k, int a2, int top2) const {
  if (k < 1 || k > size()) throw Error("invalid_input", "vertex out of range");
  return forward(GradedVector::unit(k, a2), a2, top2);
}

GradedVector QCartan::inverse_euler(int k, int a2, int top2) const {
  if (k < 1 || k > size()) throw Error("invalid_input", "vertex out of range");
  Grothendieck k0(q_);
  GradedVector out;
  const K0Class pk = k0.projective(k);
  for (int b2 = a2 + 1; b2 <= top2; b2 += 2) {
    int s = (b2 - 1 - a2) / 2;
    for (int kp = 1; kp <= size(); ++kp)
      out.add(kp, b2, to_ll(k0.euler(k0.coxeter_power(k0.projective(kp), s), pk)));
  }
  return out;
}

GradedVector QCartan::inverse_apply(const GradedVector& w, int top2) const {
  GradedVector even, odd;
  for (const auto& [key, x] : w.entries()) (key.deg2 % 2 == 0 ? even : odd).add(key.vertex, key.deg2, x);
  GradedVector out;
  if (!even.is_zero()) out += forward(even, even.min_deg2(), top2);
  if (!odd.is_zero()) out += forward(odd, odd.min_deg2(), top2);
  return out;
}

}  // namespace qca
