#include "qca/bases.hpp"

#include <algorithm>
#include <set>

namespace qca {

IntMatrix setting_lambda(const Quiver& q, Setting s) {
  if (s == Setting::EPrime) return lambda_z(build_z(q, 1));
  return Forms(q).l_matrix();
}

QuantumSeed setting_seed(const Quiver& q, Setting s) {
  return initial_seed(setting_lambda(q, s), b_matrix(build_z(q, 1)));
}

BasisContext::BasisContext(const Quiver& q, Setting s, CoefficientIdeal ideal)
    : forms_(q), setting_(s), ideal_(ideal), seed_(setting_seed(q, s)) {
  const int n = q.size();
  for (int k = 1; k <= n; ++k) starred_.push_back(starred_variable(seed_, k));
  auto pinv = left_inverse(seed_.b);
  if (!pinv) throw Error("internal", "exchange matrix does not have full column rank");
  b_left_inverse_ = std::move(*pinv);
  if (s == Setting::EPrime) {
    // the PBW products in this setting are only well defined if each degree's generators commute
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (mul(initial(i), initial(j)) != mul(initial(j), initial(i)))
          throw Error("order_dependence", "initial variables " + std::to_string(i) + " and " + std::to_string(j) +
                                              " do not commute");
        if (mul(starred(i), starred(j)) != mul(starred(j), starred(i)))
          throw Error("order_dependence", "starred variables " + std::to_string(i) + " and " + std::to_string(j) +
                                              " do not commute");
      }
  }
}

void BasisContext::clear_cache() {
  std::lock_guard lock(mu_);
  pbw_cache_.clear();
  can_cache_.clear();
}

TorusElement BasisContext::pbw(const WVector& w) {
  std::lock_guard lock(mu_);
  auto it = pbw_cache_.find(w);
  if (it != pbw_cache_.end()) return it->second;
  TorusElement x = compute_pbw(w);
  pbw_cache_.emplace(w, x);
  return x;
}

TorusElement BasisContext::canonical(const WVector& w) {
  std::lock_guard lock(mu_);
  auto it = can_cache_.find(w);
  if (it != can_cache_.end()) return it->second;
  TorusElement x = compute_canonical(w);
  can_cache_.emplace(w, x);
  return x;
}

TorusElement BasisContext::pbw_tilde(const WVector& w) {
  K0Class b = forms_.beta(w.graded());
  return pbw(w).shifted(-to_int(forms_.k0().euler(b, b)));
}

TorusElement BasisContext::canonical_tilde(const WVector& w) {
  K0Class b = forms_.beta(w.graded());
  return canonical(w).shifted(-to_int(forms_.k0().euler(b, b)));
}

TorusElement BasisContext::compute_pbw(const WVector& w) {
  if (!w.is_level1()) throw Error("outside_level1", "PBW elements are indexed by level-1 vectors");
  const int n = rank();
  const int m = 2 * n;
  TorusElement r = TorusElement::one(m);
  const Exponent g = forms_.ind(w.graded());
  if (setting_ == Setting::EPrime) {
    TorusElement top = TorusElement::one(m), bottom = TorusElement::one(m);
    GradedVector w0, w1;
    for (int i = 1; i <= n; ++i) {
      top = mul(top, twisted_pow(initial(i), static_cast<int>(w.at(i, 0)), twist()));
      bottom = mul(bottom, twisted_pow(starred(i), static_cast<int>(w.at(i, -1)), twist()));
      w0.add(i, 0, w.at(i, 0));
      w1.add(i, -2, w.at(i, -1));
    }
    r = mul(top, bottom).shifted(static_cast<int>(-forms_.e_prime(w1, w0)));
    if (r.coefficient(g) != VPoly(1))
      throw Error("internal", "PBW element does not have leading coefficient 1");
    return r;
  }
  // xi(i) = n + 1 - i
  for (int i = n; i >= 1; --i) r = mul(r, twisted_pow(initial(i), static_cast<int>(w.at(i, 0)), twist()));
  for (int i = n; i >= 1; --i) r = mul(r, twisted_pow(starred(i), static_cast<int>(w.at(i, -1)), twist()));
  int power = 0, sign = 1;
  if (!r.coefficient(g).is_unit(&power, &sign) || sign != 1)
    throw Error("internal", "PBW product has a non-unit leading coefficient");
  return r.shifted(-power);
}

std::optional<std::vector<long long>> BasisContext::displacement(const Exponent& g, const WVector& w) const {
  const Exponent g0 = forms_.ind(w.graded());
  const std::size_t m = g0.size(), n = seed_.b.cols();
  std::vector<long long> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += b_left_inverse_[j][i] * (g[i] - g0[i]);
    if (s.get_den() != 1 || s < 0) return std::nullopt;
    v[j] = s.get_num().get_si();
  }
  for (std::size_t i = 0; i < m; ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += to_ll(seed_.b(i, j)) * v[j];
    if (s != g[i] - g0[i]) return std::nullopt;
  }
  return v;
}

std::vector<WVector> BasisContext::lower_set(const WVector& w) const {
  std::set<WVector> seen{w};
  std::vector<WVector> stack{w}, out{w};
  const int n = rank();
  while (!stack.empty()) {
    WVector u = stack.back();
    stack.pop_back();
    for (int k = 1; k <= n; ++k) {
      GradedVector next = u.graded() - forms_.cartan().apply(GradedVector::unit(k, -1));
      if (!next.nonnegative()) continue;
      WVector x(next);
      if (seen.insert(x).second) {
        stack.push_back(x);
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Basis>
std::vector<BasisContext::Term> BasisContext::expand(const TorusElement& x, const WVector& top, Basis&& basis) {
  std::vector<Term> out;
  TorusElement r = x;
  while (!r.is_zero()) {
    const Exponent* best = nullptr;
    std::vector<long long> best_v;
    long long best_size = 0;
    for (const auto& [g, c] : r.terms()) {
      auto v = displacement(g, top);
      if (!v) throw Error("outside_span", "exponent lies outside the cone below the top element");
      long long size = 0;
      for (auto x : *v) size += x;
      if (!best || size < best_size) {
        best = &g;
        best_v = *v;
        best_size = size;
      }
    }
    GradedVector ug = top.graded() - forms_.cartan().apply(VHalfVector::at_minus_half(best_v));
    if (!ug.nonnegative()) throw Error("outside_span", "expansion leaves the nonnegative lower set");
    WVector u(ug);
    TorusElement b = basis(u);
    int power = 0, sign = 1;
    if (!b.coefficient(*best).is_unit(&power, &sign)) throw Error("internal", "basis element is not pointed");
    VPoly c = r.coefficient(*best).shifted(-power);
    if (sign < 0) c = -c;
    out.push_back({u, c});
    r -= b.scaled(c);
  }
  return out;
}

std::vector<BasisContext::Term> BasisContext::expand_pbw(const TorusElement& x, const WVector& top) {
  return expand(x, top, [this](const WVector& u) { return pbw(u); });
}

std::vector<BasisContext::Term> BasisContext::expand_canonical(const TorusElement& x, const WVector& top) {
  return expand(x, top, [this](const WVector& u) { return canonical(u); });
}

TorusElement BasisContext::compute_canonical(const WVector& w) {
  TorusElement cur = pbw(w);
  // add multiples of lower canonical elements until bar-invariant; each step kills the leading defect
  for (int iter = 0; iter < 100000; ++iter) {
    TorusElement defect = cur.bar() - cur;
    if (defect.is_zero()) return cur;
    auto terms = expand_canonical(defect, w);
    const Term& t = terms.front();
    if (t.u == w) throw Error("not_unitriangular", "bar expansion has a non-unit diagonal coefficient");
    VPoly a;
    for (const auto& [k, c] : t.c.terms()) {
      if (k == 0) throw Error("internal", "bar defect has a bar-invariant part");
      // bar(a) - a = -c with a in the chosen ideal
      if (ideal_ == CoefficientIdeal::NegativeV && k > 0) a.add_term(-k, -c);
      if (ideal_ == CoefficientIdeal::PositiveV && k < 0) a.add_term(-k, c);
    }
    cur += canonical(t.u).scaled(a);
  }
  throw Error("internal", "canonical basis iteration did not converge");
}

std::vector<BasisContext::Term> BasisContext::transition(const WVector& w) { return expand_pbw(canonical(w), w); }

BasisContext::BarExpansion BasisContext::bar_expansion(const WVector& w) {
  BarExpansion out;
  try {
    out.terms = expand_pbw(pbw(w).bar(), w);
  } catch (const Error& e) {
    out.problem = e.what();
    return out;
  }
  bool diag = false;
  for (const auto& t : out.terms)
    if (t.u == w) diag = t.c == VPoly(1);
  out.unitriangular = diag;
  if (!diag) out.problem = "diagonal coefficient is not 1";
  return out;
}

std::vector<WVector> level1_vectors(int n, int bound) {
  std::vector<WVector> out;
  std::vector<long long> c(2 * n, 0);
  while (true) {
    long long s = 0;
    for (auto x : c) s += x;
    if (s <= bound) {
      std::vector<long long> minus(c.begin(), c.begin() + n), zero(c.begin() + n, c.end());
      out.push_back(WVector::level1(minus, zero));
    }
    std::size_t i = 0;
    while (i < c.size() && ++c[i] > bound) c[i++] = 0;
    if (i == c.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const WVector& a, const WVector& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::map<K0Class, std::vector<WVector>> weight_classes(const Forms& f, int bound) {
  std::map<K0Class, std::vector<WVector>> out;
  for (auto& w : level1_vectors(f.size(), bound)) out[f.beta(w.graded())].push_back(w);
  return out;
}

std::vector<StructureConstant> structure_constants(BasisContext& ctx, const std::vector<WVector>& elements,
                                                   int bound) {
  std::vector<StructureConstant> out;
  for (const auto& a : elements)
    for (const auto& b : elements) {
      if (a.size() + b.size() > bound) continue;
      StructureConstant s{a, b, {}, true};
      s.terms = ctx.expand_canonical(ctx.mul(ctx.canonical(a), ctx.canonical(b)), a + b);
      for (const auto& t : s.terms)
        if (!t.c.nonnegative()) s.positive = false;
      out.push_back(std::move(s));
    }
  return out;
}

std::optional<int> matches_canonical(BasisContext& ctx, const TorusElement& x) {
  GVector g = g_vector(x, ctx.b_tilde());
  auto w = ctx.forms().w_from_g(g.g);
  if (!w) return std::nullopt;
  int power = 0, sign = 1;
  if (!g.coefficient.is_unit(&power, &sign) || sign != 1) return std::nullopt;
  if (ctx.canonical(*w).shifted(power) != x) return std::nullopt;
  return power;
}

}  // namespace qca
