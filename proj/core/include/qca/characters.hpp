#pragma once

#include "qca/forms.hpp"
#include "qca/grassmannian.hpp"
#include "qca/rep.hpp"
#include "qca/torus.hpp"

namespace qca {

// All e with 0 <= e <= d componentwise.
std::vector<std::vector<int>> sub_dimension_vectors(const std::vector<int>& d);

// sum_e N_e(v^2) v^{-deg N_e} x^{ind(w) + B~ e}, B~ the level-1 z-pattern matrix of the quiver.
// The index of w stands in for the index of M.
TorusElement cc_character(const RationalRep& m, const WVector& w, const GrassOptions& opt = {});

struct GenericCharacter {
  YPolynomial value;
  GenericKernel kernel;
};

// sum_v t^{-dim Gr_v} P_t(Gr_v) Y^{w - C_q v} over the generic kernel.
GenericCharacter generic_character(const Quiver& q, const WVector& w, const GenericOptions& gopt = {},
                                   const GrassOptions& opt = {});

}  // namespace qca
