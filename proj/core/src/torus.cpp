#include "qca/torus.hpp"

#include <algorithm>
#include <sstream>

namespace qca {

VPoly VPoly::monomial(int power, const Int& c) {
  VPoly p;
  if (c != 0) p.c_[power] = c;
  return p;
}

Int VPoly::coefficient(int power) const {
  auto it = c_.find(power);
  return it == c_.end() ? Int(0) : it->second;
}

bool VPoly::is_unit(int* power, int* sign) const {
  if (c_.size() != 1) return false;
  const auto& [k, c] = *c_.begin();
  if (c != 1 && c != -1) return false;
  if (power) *power = k;
  if (sign) *sign = c > 0 ? 1 : -1;
  return true;
}

bool VPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second > 0; });
}

VPoly VPoly::bar() const {
  VPoly r;
  for (const auto& [k, c] : c_) r.c_[-k] = c;
  return r;
}

VPoly VPoly::shifted(int k) const {
  VPoly r;
  for (const auto& [p, c] : c_) r.c_[p + k] = c;
  return r;
}

Int VPoly::at_one() const {
  Int s = 0;
  for (const auto& kv : c_) s += kv.second;
  return s;
}

void VPoly::add_term(int power, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

VPoly& VPoly::operator+=(const VPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

VPoly operator-(VPoly a) {
  for (auto& kv : a.c_) kv.second = -kv.second;
  return a;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  VPoly r;
  for (const auto& [i, x] : a.c_)
    for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
  return r;
}

std::string VPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [k, c] = *it;
    Int a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

SkewForm::SkewForm(const IntMatrix& lambda) : m_(static_cast<int>(lambda.rows())), a_(lambda.rows() * lambda.rows()) {
  if (lambda.rows() != lambda.cols()) throw Error("dimension_mismatch", "skew form must be square");
  if (!lambda.is_skew_symmetric()) throw Error("invalid_input", "form is not skew-symmetric");
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) a_[i * m_ + j] = qca::to_ll(lambda(i, j));
}

long long SkewForm::eval(const Exponent& g, const Exponent& h) const {
  if (static_cast<int>(g.size()) != m_ || static_cast<int>(h.size()) != m_)
    throw Error("dimension_mismatch", "exponent length differs from form rank");
  long long s = 0;
  for (int i = 0; i < m_; ++i) {
    if (g[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < m_; ++j) row += a_[i * m_ + j] * h[j];
    s += g[i] * row;
  }
  return s;
}

IntMatrix SkewForm::matrix() const {
  IntMatrix r(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) r(i, j) = Int(static_cast<long>(a_[i * m_ + j]));
  return r;
}

TorusElement TorusElement::monomial(const Exponent& g, const VPoly& c) {
  TorusElement t(static_cast<int>(g.size()));
  if (!c.is_zero()) t.t_[g] = c;
  return t;
}

TorusElement TorusElement::generator(int rank, int i) {
  if (i < 1 || i > rank) throw Error("invalid_input", "generator index out of range");
  Exponent g(rank, 0);
  g[i - 1] = 1;
  return monomial(g);
}

VPoly TorusElement::coefficient(const Exponent& g) const {
  auto it = t_.find(g);
  return it == t_.end() ? VPoly() : it->second;
}

const Exponent& TorusElement::lex_max() const {
  if (t_.empty()) throw Error("invalid_input", "zero element has no leading term");
  return t_.rbegin()->first;
}

void TorusElement::add_term(const Exponent& g, const VPoly& c) {
  if (static_cast<int>(g.size()) != m_) throw Error("dimension_mismatch", "exponent length differs from torus rank");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TorusElement TorusElement::bar() const {
  TorusElement r(m_);
  for (const auto& [g, c] : t_) r.t_.emplace(g, c.bar());
  return r;
}

TorusElement TorusElement::scaled(const VPoly& c) const {
  TorusElement r(m_);
  if (c.is_zero()) return r;
  for (const auto& [g, p] : t_) r.t_.emplace(g, p * c);
  return r;
}

bool TorusElement::nonnegative() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.nonnegative(); });
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (o.m_ != m_ && !o.is_zero()) {
    if (is_zero() && t_.empty() && m_ == 0) m_ = o.m_;
    else throw Error("dimension_mismatch", "torus elements of different rank");
  }
  for (const auto& [g, c] : o.t_) add_term(g, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (o.m_ != m_ && !o.is_zero()) {
    if (is_zero() && m_ == 0) m_ = o.m_;
    else throw Error("dimension_mismatch", "torus elements of different rank");
  }
  for (const auto& [g, c] : o.t_) add_term(g, -c);
  return *this;
}

std::string TorusElement::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")x^(";
    for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? "," : "") << it->first[i];
    os << ")";
  }
  return os.str();
}

TorusElement twisted_mul(const TorusElement& a, const TorusElement& b, const SkewForm& lambda) {
  if (a.rank() != lambda.dim() || b.rank() != lambda.dim())
    throw Error("dimension_mismatch", "torus element rank differs from the form");
  const int m = lambda.dim();
  // lambda * h for every exponent of b
  std::vector<std::pair<const Exponent*, std::vector<long long>>> lh;
  lh.reserve(b.size());
  for (const auto& [h, c] : b.terms()) {
    std::vector<long long> r(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) r[i] += lambda(i, j) * h[j];
    lh.emplace_back(&h, std::move(r));
  }
  TorusElement out(m);
  Exponent sum(m);
  for (const auto& [g, p] : a.terms()) {
    std::size_t idx = 0;
    for (const auto& [h, q] : b.terms()) {
      const auto& r = lh[idx++].second;
      long long s = 0;
      for (int i = 0; i < m; ++i) {
        s += g[i] * r[i];
        sum[i] = g[i] + h[i];
      }
      out.add_term(sum, (p * q).shifted(static_cast<int>(s)));
    }
  }
  return out;
}

TorusElement twisted_pow(const TorusElement& a, int k, const SkewForm& lambda) {
  if (k < 0) throw Error("invalid_input", "negative power of a torus element");
  TorusElement r = TorusElement::one(lambda.dim());
  for (int i = 0; i < k; ++i) r = twisted_mul(r, a, lambda);
  return r;
}

std::optional<long long> quasi_commutation(const TorusElement& yi, const TorusElement& yj, const SkewForm& lambda) {
  TorusElement ab = twisted_mul(yi, yj, lambda);
  TorusElement ba = twisted_mul(yj, yi, lambda);
  if (ab.is_zero() || ba.is_zero()) return ab == ba ? std::optional<long long>(0) : std::nullopt;
  const Exponent& g = ab.lex_max();
  VPoly ca = ab.coefficient(g), cb = ba.coefficient(g);
  if (cb.is_zero()) return std::nullopt;
  long long k = ca.min_power() - cb.min_power();
  if (ab != ba.shifted(static_cast<int>(k))) return std::nullopt;
  return k;
}

TorusElement normalized_monomial(const std::vector<TorusElement>& ys, const std::vector<int>& c,
                                 const std::vector<std::vector<long long>>& commutation, const SkewForm& lambda) {
  if (ys.size() != c.size()) throw Error("dimension_mismatch", "exponent count differs from element count");
  long long total = 0;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) total += static_cast<long long>(c[i]) * c[j] * commutation[i][j];
  if (total % 2 != 0)
    throw Error("odd_normalization", "normalization exponent " + std::to_string(total) + " is odd");
  TorusElement r = TorusElement::one(lambda.dim());
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (c[i] != 0) r = twisted_mul(r, twisted_pow(ys[i], c[i], lambda), lambda);
  return r.shifted(static_cast<int>(-total / 2));
}

TorusElement normalized_monomial(const std::vector<TorusElement>& ys, const std::vector<int>& c,
                                 const SkewForm& lambda) {
  std::vector<std::vector<long long>> comm(ys.size(), std::vector<long long>(ys.size(), 0));
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      if (c[i] == 0 || c[j] == 0) continue;
      auto k = quasi_commutation(ys[i], ys[j], lambda);
      if (!k)
        throw Error("not_quasi_commuting",
                    "elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not quasi-commute");
      comm[i][j] = *k;
      comm[j][i] = -*k;
    }
  return normalized_monomial(ys, c, comm, lambda);
}

namespace {

struct Box {
  std::vector<int> lo, hi;
};

Box newton_box(const TorusElement& a) {
  const int m = a.rank();
  Box b{std::vector<int>(m, 0), std::vector<int>(m, 0)};
  bool first = true;
  for (const auto& [g, c] : a.terms()) {
    for (int i = 0; i < m; ++i) {
      if (first || g[i] < b.lo[i]) b.lo[i] = g[i];
      if (first || g[i] > b.hi[i]) b.hi[i] = g[i];
    }
    first = false;
  }
  return b;
}

}  // namespace

TorusElement exact_left_divide(const TorusElement& p, const TorusElement& d, const SkewForm& lambda) {
  if (d.is_zero()) throw Error("division_by_zero", "division by the zero element");
  const int m = lambda.dim();
  TorusElement q(m);
  if (p.is_zero()) return q;
  const Exponent& lead = d.lex_max();
  int lead_power = 0, lead_sign = 1;
  if (!d.coefficient(lead).is_unit(&lead_power, &lead_sign))
    throw Error("non_unit_leading_coefficient", "divisor leading coefficient is not a signed power of v");
  // the quotient's Newton polytope lies in this box: face terms multiply without cancellation in a domain
  Box bp = newton_box(p), bd = newton_box(d);
  std::vector<int> lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    lo[i] = bp.lo[i] - bd.lo[i];
    hi[i] = bp.hi[i] - bd.hi[i];
    if (lo[i] > hi[i]) throw Error("not_divisible", "exponent ranges are incompatible");
  }
  TorusElement r = p;
  Exponent h(m);
  while (!r.is_zero()) {
    const Exponent& g = r.lex_max();
    for (int i = 0; i < m; ++i) {
      h[i] = g[i] - lead[i];
      if (h[i] < lo[i] || h[i] > hi[i]) throw Error("not_divisible", "nonzero remainder in exact division");
    }
    long long s = lambda.eval(lead, h);
    VPoly c = r.coefficient(g).shifted(static_cast<int>(-lead_power - s));
    if (lead_sign < 0) c = -c;
    TorusElement term = TorusElement::monomial(h, c);
    q += term;
    r -= twisted_mul(d, term, lambda);
  }
  return q;
}

TorusElement exact_right_divide(const TorusElement& p, const TorusElement& d, const SkewForm& lambda) {
  // Q * D = P  <=>  bar(D) * bar(Q) = bar(P)
  return exact_left_divide(p.bar(), d.bar(), lambda).bar();
}

std::vector<Int> compatibility_check(const IntMatrix& lambda, const IntMatrix& b) {
  const std::size_t m = lambda.rows();
  if (lambda.cols() != m || b.rows() != m || b.cols() > m)
    throw Error("dimension_mismatch", "compatibility needs an m x m form and an m x n matrix with n <= m");
  if (!lambda.is_skew_symmetric()) throw Error("not_compatible", "form is not skew-symmetric");
  IntMatrix prod = lambda * (-b);
  const std::size_t n = b.cols();
  std::vector<Int> diag(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int& x = prod(i, j);
      std::string where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + x.get_str();
      if (i == j) {
        if (x <= 0) throw Error("not_compatible", "diagonal " + where + " is not positive");
        diag[i] = x;
      } else if (x != 0) {
        throw Error("not_compatible", "off-diagonal " + where + " is nonzero");
      }
    }
  return diag;
}

std::map<Exponent, Int> specialize(const TorusElement& a) {
  std::map<Exponent, Int> r;
  for (const auto& [g, c] : a.terms()) {
    Int s = c.at_one();
    if (s != 0) r[g] = s;
  }
  return r;
}

Rat evaluate_classical(const TorusElement& a, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != a.rank()) throw Error("dimension_mismatch", "evaluation point has wrong length");
  Rat total = 0;
  for (const auto& [g, c] : a.terms()) {
    Rat mono = c.at_one();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (point[i] == 0) throw Error("invalid_input", "evaluation at zero coordinate");
      Rat base = g[i] > 0 ? point[i] : Rat(1) / point[i];
      for (int k = 0; k < std::abs(g[i]); ++k) mono *= base;
    }
    total += mono;
  }
  return total;
}

}  // namespace qca
