#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qca/matrix.hpp"

namespace qca {

// Laurent polynomial in v with integer coefficients; no zero coefficient is stored.
class VPoly {
 public:
  VPoly() = default;
  VPoly(const Int& c) { if (c != 0) c_[0] = c; }  // NOLINT(google-explicit-constructor)
  VPoly(long c) : VPoly(Int(c)) {}                 // NOLINT(google-explicit-constructor)
  static VPoly monomial(int power, const Int& c = 1);

  const std::map<int, Int>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Int coefficient(int power) const;
  int min_power() const { return c_.begin()->first; }
  int max_power() const { return c_.rbegin()->first; }
  // Returns the exponent k if this equals +-v^k.
  bool is_unit(int* power = nullptr, int* sign = nullptr) const;
  bool nonnegative() const;

  VPoly bar() const;
  VPoly shifted(int k) const;  // v^k * this
  Int at_one() const;
  void add_term(int power, const Int& c);

  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  friend VPoly operator-(VPoly a);
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  friend bool operator==(const VPoly&, const VPoly&) = default;

  std::string to_string(const std::string& var = "v") const;

 private:
  std::map<int, Int> c_;
};

using Exponent = std::vector<int>;

// Skew-symmetric form on Z^m; values fit comfortably in machine integers at desk scale.
class SkewForm {
 public:
  SkewForm() = default;
  explicit SkewForm(const IntMatrix& lambda);

  int dim() const { return m_; }
  long long operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
  long long eval(const Exponent& g, const Exponent& h) const;
  IntMatrix matrix() const;

  friend bool operator==(const SkewForm&, const SkewForm&) = default;

 private:
  int m_ = 0;
  std::vector<long long> a_;
};

// Finite Z[v^+-]-combination of monomials x^g in a quantum torus of rank m.
class TorusElement {
 public:
  using Terms = std::map<Exponent, VPoly>;

  TorusElement() = default;
  explicit TorusElement(int rank) : m_(rank) {}
  static TorusElement monomial(const Exponent& g, const VPoly& c = VPoly(1));
  static TorusElement one(int rank) { return monomial(Exponent(rank, 0)); }
  static TorusElement generator(int rank, int i);  // x_i, 1-based

  int rank() const { return m_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  VPoly coefficient(const Exponent& g) const;
  const Exponent& lex_max() const;
  void add_term(const Exponent& g, const VPoly& c);

  TorusElement bar() const;
  TorusElement scaled(const VPoly& c) const;
  TorusElement shifted(int k) const { return scaled(VPoly::monomial(k)); }
  bool nonnegative() const;

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  std::string to_string() const;

 private:
  int m_ = 0;
  Terms t_;
};

TorusElement twisted_mul(const TorusElement& a, const TorusElement& b, const SkewForm& lambda);
TorusElement twisted_pow(const TorusElement& a, int k, const SkewForm& lambda);

// v^{-k} where k is the exponent with y_i * y_j = v^k y_j * y_i; nullopt if they do not quasi-commute.
std::optional<long long> quasi_commutation(const TorusElement& yi, const TorusElement& yj, const SkewForm& lambda);

// v^{-sum_{i<j} c_i c_j lambda_ij / 2} y_1^{c_1} * ... * y_r^{c_r}, lambda_ij measured by quasi_commutation.
TorusElement normalized_monomial(const std::vector<TorusElement>& ys, const std::vector<int>& c,
                                 const SkewForm& lambda);
// Same with the commutation exponents supplied by the caller (not re-checked).
TorusElement normalized_monomial(const std::vector<TorusElement>& ys, const std::vector<int>& c,
                                 const std::vector<std::vector<long long>>& commutation, const SkewForm& lambda);

// Q with D * Q = P.
TorusElement exact_left_divide(const TorusElement& p, const TorusElement& d, const SkewForm& lambda);
// Q with Q * D = P.
TorusElement exact_right_divide(const TorusElement& p, const TorusElement& d, const SkewForm& lambda);

// The diagonal of D when lambda * (-b) = [D; 0] with D positive diagonal.
std::vector<Int> compatibility_check(const IntMatrix& lambda, const IntMatrix& b);

// v -> 1.
std::map<Exponent, Int> specialize(const TorusElement& a);
Rat evaluate_classical(const TorusElement& a, const std::vector<Rat>& point);

}  // namespace qca
