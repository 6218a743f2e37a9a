#include "qca/characters.hpp"

namespace qca {

std::vector<std::vector<int>> sub_dimension_vectors(const std::vector<int>& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(d.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < d.size() && ++e[i] > d[i]) e[i++] = 0;
    if (i == d.size()) break;
  }
  return out;
}

TorusElement cc_character(const RationalRep& m, const WVector& w, const GrassOptions& opt) {
  const Quiver& q = m.quiver;
  const int n = q.size();
  if (!is_rigid(m)) throw Error("not_rigid", "the module is not rigid");
  Forms f(q);
  Exponent base = f.ind(w.graded());
  IntMatrix bt = b_matrix(build_z(q, 1));
  TorusElement out(2 * n);
  for (const auto& e : sub_dimension_vectors(m.dims)) {
    GrassPolynomial poly = grass_polynomial(m, e, opt);
    if (poly.is_zero()) continue;
    Exponent g = base;
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < n; ++j) g[i] += to_int(bt(i, j)) * e[j];
    VPoly c;
    for (int j = 0; j <= poly.degree(); ++j) c.add_term(2 * j - poly.degree(), poly.coeffs[j]);
    out.add_term(g, c);
  }
  return out;
}

namespace {

YPolynomial kernel_character(const RationalRep& k, const WVector& w, const GrassOptions& opt) {
  QCartan cq(k.quiver);
  YPolynomial out;
  for (const auto& e : sub_dimension_vectors(k.dims)) {
    GrassPolynomial poly = grass_polynomial(k, e, opt);
    if (poly.is_zero()) continue;
    std::vector<long long> ev(e.begin(), e.end());
    GradedVector key = w.graded() - cq.apply(VHalfVector::at_minus_half(ev));
    // t^{2j - deg}, stored in half-t units
    VPoly c;
    for (int j = 0; j <= poly.degree(); ++j) c.add_term(2 * (2 * j - poly.degree()), poly.coeffs[j]);
    out.add_term(key, c);
  }
  return out;
}

}  // namespace

GenericCharacter generic_character(const Quiver& q, const WVector& w, const GenericOptions& gopt,
                                   const GrassOptions& opt) {
  // A sample whose kernel only splits over an extension (e.g. regular Kronecker summands with
  // irrational eigenvalues) does not have polynomial point counts; draw again with the next seed.
  GenericOptions o = gopt;
  for (int attempt = 0; attempt < std::max(1, gopt.attempts); ++attempt) {
    o.rng_seed = gopt.rng_seed + attempt;
    GenericCharacter out;
    out.kernel = generic_kernel(q, w, o);
    try {
      out.value = kernel_character(out.kernel.module, w, opt);
      return out;
    } catch (const Error& e) {
      if (e.code() != "non_polynomial_count") throw;
    }
  }
  throw Error("non_polynomial_count", "no sampled kernel had polynomial point counts");
}

}  // namespace qca
