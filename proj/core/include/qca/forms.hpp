#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qca/graded.hpp"
#include "qca/torus.hpp"

namespace qca {

// Which compatible pair is active: the z-pattern form (D = 1) or the matrix L (D = 2).
enum class Setting { EPrime, L };

int setting_delta(Setting s);

class Forms {
 public:
  explicit Forms(const Quiver& q);

  const Quiver& quiver() const { return cartan_.quiver(); }
  const QCartan& cartan() const { return cartan_; }
  const Grothendieck& k0() const { return k0_; }
  int size() const { return cartan_.size(); }

  // w1[s] . C_q^{-1} w2, s doubled.
  long long shifted_pairing(const GradedVector& w1, int s2, const GradedVector& w2) const;

  long long d(const GradedVector& v1, const GradedVector& w1, const GradedVector& v2, const GradedVector& w2) const;
  long long d_w(const GradedVector& w1, const GradedVector& w2) const;
  long long e_prime(const GradedVector& w1, const GradedVector& w2) const;
  long long d_tilde(const GradedVector& v1, const GradedVector& w1, const GradedVector& v2,
                    const GradedVector& w2) const;
  long long n_form(const GradedVector& w1, const GradedVector& w2) const;

  // 2n x 2n matrix of the N form on e_1(0)..e_n(0), e_1(0)+e_1(-1)..e_n(0)+e_n(-1).
  IntMatrix l_matrix() const;
  // 2n x 2n matrix of the N form on e_1(0)..e_n(0), e_1(-1)..e_n(-1).
  IntMatrix n_matrix() const;

  // sum w_i(a) c^{a+1}[P_i]
  K0Class beta(const GradedVector& w) const;
  // <beta(w), beta(w)> + deg c^{-1} beta(w)
  long long quadratic_n(const GradedVector& w) const;

  bool l_dominant(const GradedVector& v, const GradedVector& w) const;
  // (v1, w1) <= (v2, w2) in the dominance order
  bool dominance_leq(const GradedVector& v1, const GradedVector& w1, const GradedVector& v2,
                     const GradedVector& w2) const;

  // Level-1 index; entries of w may be negative (w - C_q v).
  Exponent ind(const GradedVector& w) const;
  std::optional<WVector> w_from_g(const Exponent& g) const;

 private:
  QCartan cartan_;
  Grothendieck k0_;
};

// The pure coefficient part f and the coefficient-free part phi with w = phi + f.
struct CoefficientSplit {
  WVector free_part;
  WVector coefficient_part;
};
CoefficientSplit coefficient_split(const WVector& w);

// Element of the Y-ring: keys are level-1 vectors w - C_q v, coefficients are Laurent
// polynomials in t^{1/2} (the stored exponent h means t^{h/2}).
class YPolynomial {
 public:
  using Terms = std::map<GradedVector, VPoly>;

  YPolynomial() = default;
  static YPolynomial monomial(const GradedVector& key, const VPoly& c = VPoly(1));

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const GradedVector& key, const VPoly& c);

  YPolynomial& operator+=(const YPolynomial& o);
  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

 private:
  Terms t_;
};

// Untwisted product.
YPolynomial y_product(const YPolynomial& a, const YPolynomial& b);
// m1 * m2 = t^{-E'(m1,m2)} m1 m2 in the z-pattern setting, t^{N(m1,m2)/2} m1 m2 in the L setting.
YPolynomial y_twisted_product(const YPolynomial& a, const YPolynomial& b, const Forms& f, Setting s);
// t^{lambda} Y^w -> v^{delta lambda} x^{ind w}
TorusElement cor_map(const YPolynomial& y, const Forms& f, Setting s);

}  // namespace qca
