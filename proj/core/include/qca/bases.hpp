#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qca/forms.hpp"
#include "qca/mutation.hpp"
#include "qca/weyl.hpp"

namespace qca {

// Where the off-diagonal coefficients of the canonical basis live.
enum class CoefficientIdeal { NegativeV, PositiveV };

// Level-1 z-pattern cluster algebra of a quiver with either twist, and its PBW/canonical bases.
class BasisContext {
 public:
  BasisContext(const Quiver& q, Setting s, CoefficientIdeal ideal = CoefficientIdeal::NegativeV);

  const Forms& forms() const { return forms_; }
  const Quiver& quiver() const { return forms_.quiver(); }
  Setting setting() const { return setting_; }
  CoefficientIdeal ideal() const { return ideal_; }
  const QuantumSeed& seed() const { return seed_; }
  const SkewForm& twist() const { return *seed_.ambient; }
  const IntMatrix& b_tilde() const { return seed_.b; }
  int rank() const { return forms_.size(); }

  TorusElement mul(const TorusElement& a, const TorusElement& b) const { return twisted_mul(a, b, twist()); }
  const TorusElement& initial(int i) const { return seed_.vars.at(i - 1); }
  // the cluster variable reached by mutating at n, ..., i
  const TorusElement& starred(int i) const { return starred_.at(i - 1); }

  TorusElement pbw(const WVector& w);
  TorusElement canonical(const WVector& w);
  // both multiplied by v^{-<beta(w), beta(w)>}
  TorusElement pbw_tilde(const WVector& w);
  TorusElement canonical_tilde(const WVector& w);

  struct Term {
    WVector u;
    VPoly c;
  };
  // x = sum c_u pbw(u) (resp. can(u)) over u below top
  std::vector<Term> expand_pbw(const TorusElement& x, const WVector& top);
  std::vector<Term> expand_canonical(const TorusElement& x, const WVector& top);
  // can(w) in the PBW basis
  std::vector<Term> transition(const WVector& w);

  // {w - C_q v >= 0 : v in N^I at degree -1/2}
  std::vector<WVector> lower_set(const WVector& w) const;
  // v with ind(w) + B~ v = g, if it is a nonnegative integer vector
  std::optional<std::vector<long long>> displacement(const Exponent& g, const WVector& w) const;

  struct BarExpansion {
    std::vector<Term> terms;  // bar(pbw(w)) = sum c_u pbw(u)
    bool unitriangular = false;
    std::string problem;
  };
  BarExpansion bar_expansion(const WVector& w);

  void clear_cache();

 private:
  Forms forms_;
  Setting setting_;
  CoefficientIdeal ideal_;
  QuantumSeed seed_;
  std::vector<TorusElement> starred_;
  std::vector<std::vector<Rat>> b_left_inverse_;
  std::recursive_mutex mu_;
  std::map<WVector, TorusElement> pbw_cache_, can_cache_;

  TorusElement compute_pbw(const WVector& w);
  TorusElement compute_canonical(const WVector& w);
  template <class Basis>
  std::vector<Term> expand(const TorusElement& x, const WVector& top, Basis&& basis);
};

// The twist used as the initial compatible pair in each setting.
IntMatrix setting_lambda(const Quiver& q, Setting s);
QuantumSeed setting_seed(const Quiver& q, Setting s);

// All level-1 w with |w| <= bound.
std::vector<WVector> level1_vectors(int n, int bound);
// level-1 w with |w| <= bound grouped by beta(w)
std::map<K0Class, std::vector<WVector>> weight_classes(const Forms& f, int bound);

struct StructureConstant {
  WVector left, right;
  std::vector<BasisContext::Term> terms;  // can(left) * can(right) = sum c can(u)
  bool positive = true;
};
std::vector<StructureConstant> structure_constants(BasisContext& ctx, const std::vector<WVector>& elements,
                                                   int bound);

// Power k with x = v^k can(w(g)), g the g-vector of x; nullopt if no such k.
std::optional<int> matches_canonical(BasisContext& ctx, const TorusElement& x);

}  // namespace qca
