#include "qca/forms.hpp"

#include <algorithm>

namespace qca {

int setting_delta(Setting s) { return s == Setting::EPrime ? 1 : 2; }

Forms::Forms(const Quiver& q) : cartan_(q), k0_(q) {}

long long Forms::shifted_pairing(const GradedVector& w1, int s2, const GradedVector& w2) const {
  if (w1.is_zero() || w2.is_zero()) return 0;
  GradedVector inv = cartan_.inverse_apply(w2, w1.max_deg2() - s2);
  return w1.shifted(s2).dot(inv);
}

long long Forms::d(const GradedVector& v1, const GradedVector& w1, const GradedVector& v2,
                   const GradedVector& w2) const {
  GradedVector m1 = w1 - cartan_.apply(v1);
  return checked_add(m1.dot(v2.shifted(-1)), v1.dot(w2.shifted(-1)));
}

long long Forms::d_w(const GradedVector& w1, const GradedVector& w2) const { return -shifted_pairing(w1, 1, w2); }

long long Forms::e_prime(const GradedVector& w1, const GradedVector& w2) const {
  return checked_add(-shifted_pairing(w1, 1, w2), shifted_pairing(w2, 1, w1));
}

long long Forms::d_tilde(const GradedVector& v1, const GradedVector& w1, const GradedVector& v2,
                         const GradedVector& w2) const {
  return checked_add(d(v1, w1, v2, w2), d_w(w1, w2));
}

long long Forms::n_form(const GradedVector& w1, const GradedVector& w2) const {
  long long s = shifted_pairing(w1, 1, w2);
  s = checked_add(s, -shifted_pairing(w1, -1, w2));
  s = checked_add(s, -shifted_pairing(w2, 1, w1));
  return checked_add(s, shifted_pairing(w2, -1, w1));
}

namespace {

IntMatrix gram(const Forms& f, const std::vector<GradedVector>& basis) {
  IntMatrix r(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) r(i, j) = Int(static_cast<long>(f.n_form(basis[i], basis[j])));
  return r;
}

}  // namespace

IntMatrix Forms::l_matrix() const {
  const int n = size();
  std::vector<GradedVector> basis;
  for (int i = 1; i <= n; ++i) basis.push_back(GradedVector::unit(i, 0));
  for (int i = 1; i <= n; ++i) basis.push_back(GradedVector::unit(i, 0) + GradedVector::unit(i, -2));
  return gram(*this, basis);
}

IntMatrix Forms::n_matrix() const {
  const int n = size();
  std::vector<GradedVector> basis;
  for (int i = 1; i <= n; ++i) basis.push_back(GradedVector::unit(i, 0));
  for (int i = 1; i <= n; ++i) basis.push_back(GradedVector::unit(i, -2));
  return gram(*this, basis);
}

K0Class Forms::beta(const GradedVector& w) const {
  K0Class r(static_cast<std::size_t>(size()));
  for (const auto& [key, x] : w.entries()) {
    if (key.deg2 % 2 != 0) throw Error("invalid_input", "beta is defined on integer degrees");
    r += Int(static_cast<long>(x)) * k0_.coxeter_power(k0_.projective(key.vertex), key.deg2 / 2 + 1);
  }
  return r;
}

long long Forms::quadratic_n(const GradedVector& w) const {
  K0Class b = beta(w);
  K0Class cb = k0_.coxeter_power(b, -1);
  Int deg = 0;
  for (const auto& x : cb.coords()) deg += x;
  return to_ll(k0_.euler(b, b) + deg);
}

bool Forms::l_dominant(const GradedVector& v, const GradedVector& w) const {
  return (w - cartan_.apply(v)).nonnegative();
}

bool Forms::dominance_leq(const GradedVector& v1, const GradedVector& w1, const GradedVector& v2,
                          const GradedVector& w2) const {
  GradedVector target = (w2 - cartan_.apply(v2)) - (w1 - cartan_.apply(v1));
  auto extra = cartan_.solve(target);
  return extra && extra->nonnegative();
}

Exponent Forms::ind(const GradedVector& w) const {
  const int n = size();
  Exponent g(2 * n, 0);
  for (const auto& [key, x] : w.entries()) {
    if (key.vertex < 1 || key.vertex > n) throw Error("invalid_input", "vertex out of range");
    int xi = static_cast<int>(x);
    if (key.deg2 == 0) {
      g[key.vertex - 1] += xi;
    } else if (key.deg2 == -2) {
      g[key.vertex - 1] -= xi;
      g[n + key.vertex - 1] += xi;
    } else {
      throw Error("outside_level1", "index is defined on degrees -1 and 0 only");
    }
  }
  return g;
}

std::optional<WVector> Forms::w_from_g(const Exponent& g) const {
  const int n = size();
  if (static_cast<int>(g.size()) != 2 * n) throw Error("dimension_mismatch", "g-vector must have length 2n");
  std::vector<long long> minus(n), zero(n);
  for (int i = 0; i < n; ++i) {
    minus[i] = g[n + i];
    zero[i] = static_cast<long long>(g[i]) + g[n + i];
    if (minus[i] < 0 || zero[i] < 0) return std::nullopt;
  }
  return WVector::level1(minus, zero);
}

CoefficientSplit coefficient_split(const WVector& w) {
  GradedVector f;
  for (const auto& [key, x] : w.graded().entries()) {
    if (key.deg2 != -2) continue;
    long long k = std::min(x, w.graded().get(key.vertex, 0));
    f.add(key.vertex, -2, k);
    f.add(key.vertex, 0, k);
  }
  return {WVector(w.graded() - f), WVector(f)};
}

YPolynomial YPolynomial::monomial(const GradedVector& key, const VPoly& c) {
  YPolynomial y;
  y.add_term(key, c);
  return y;
}

void YPolynomial::add_term(const GradedVector& key, const VPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

YPolynomial y_product(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial r;
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) r.add_term(k1 + k2, c1 * c2);
  return r;
}

YPolynomial y_twisted_product(const YPolynomial& a, const YPolynomial& b, const Forms& f, Setting s) {
  YPolynomial r;
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) {
      long long h = s == Setting::EPrime ? -2 * f.e_prime(k1, k2) : f.n_form(k1, k2);
      r.add_term(k1 + k2, (c1 * c2).shifted(static_cast<int>(h)));
    }
  return r;
}

TorusElement cor_map(const YPolynomial& y, const Forms& f, Setting s) {
  const int delta = setting_delta(s);
  TorusElement out(2 * f.size());
  for (const auto& [key, c] : y.terms()) {
    VPoly img;
    for (const auto& [h, x] : c.terms()) {
      long long p = static_cast<long long>(delta) * h;
      if (p % 2 != 0) throw Error("half_power", "cor produces a half power of v");
      img.add_term(static_cast<int>(p / 2), x);
    }
    out.add_term(f.ind(key), img);
  }
  return out;
}

}  // namespace qca
