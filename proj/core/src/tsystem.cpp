#include "qca/tsystem.hpp"

#include "qca/linalg.hpp"

namespace qca {

TSystemReport verify_cluster_tsystem(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 1 || k > n) throw Error("invalid_vertex", "vertex " + std::to_string(k) + " out of range");
  BasisContext ctx(q, Setting::L);
  const Forms& f = ctx.forms();
  const IntMatrix b = b_matrix(q);
  const SkewForm& lam = ctx.twist();
  const int m = 2 * n;

  TSystemReport r;
  r.k = k;
  Exponent ek(m, 0), enk(m, 0), sum(m, 0);
  ek[k - 1] = 1;
  enk[n + k - 1] = 1;
  std::vector<TorusElement> factors;
  std::vector<int> powers;
  TorusElement literal = TorusElement::one(m);
  for (int i = 1; i < k; ++i) {
    int c = to_int(b(i - 1, k - 1));
    sum[i - 1] = c;
    factors.push_back(ctx.initial(i));
    powers.push_back(c);
    literal = ctx.mul(literal, twisted_pow(ctx.initial(i), c, lam));
  }
  for (int j = k + 1; j <= n; ++j) {
    int c = to_int(b(k - 1, j - 1));
    sum[n + j - 1] = c;
    factors.push_back(ctx.starred(j));
    powers.push_back(c);
    literal = ctx.mul(literal, twisted_pow(ctx.starred(j), c, lam));
  }
  TorusElement normalized = factors.empty() ? TorusElement::one(m) : normalized_monomial(factors, powers, lam);
  r.l_frozen = lam.eval(enk, ek);
  r.l_product = lam.eval(sum, ek);
  r.l_plus_two = r.l_frozen + 2 == r.l_product;

  const TorusElement& frozen = ctx.initial(n + k);
  r.lhs = ctx.mul(ctx.starred(k), ctx.initial(k));
  r.literal = r.lhs == frozen.shifted(static_cast<int>(r.l_frozen)) + literal.shifted(static_cast<int>(r.l_product));
  TorusElement scaled = r.lhs.shifted(static_cast<int>(-r.l_frozen - 2));
  r.rescaled_literal = scaled == frozen.shifted(-2) + literal;
  r.rescaled_normalized = scaled == frozen.shifted(-2) + normalized;
  r.normalized_rhs = (frozen.shifted(-2) + normalized).shifted(static_cast<int>(r.l_frozen + 2));
  r.classical = specialize(r.lhs) == specialize(frozen + literal);

  const Grothendieck& k0 = f.k0();
  K0Class bm = f.beta(GradedVector::unit(k, -2)), b0 = f.beta(GradedVector::unit(k, 0));
  const long long pairing = to_ll(k0.symmetric(bm, b0));
  r.frozen_pairing = r.l_frozen == pairing;
  r.frozen_pairing_minus = r.l_frozen == -pairing;
  K0Class lhs_beta = K0Class::from(std::vector<long long>(n, 0));
  for (int i = 1; i < k; ++i) lhs_beta = lhs_beta + b(i - 1, k - 1) * f.beta(GradedVector::unit(i, 0));
  for (int j = k + 1; j <= n; ++j) lhs_beta = lhs_beta + b(k - 1, j - 1) * f.beta(GradedVector::unit(j, -2));
  r.beta_balance = lhs_beta == bm + b0;
  return r;
}

LPermutationReport check_l_permutation(const Quiver& q) {
  const int n = q.size(), m = 2 * n;
  const Grothendieck k0(q);
  // beta_i = P_{xi(i)}, beta_{i+n} = c^{-1} P_{xi(i)}
  auto xi = [n](int i) { return n + 1 - i; };
  std::vector<K0Class> beta(m + 1);
  for (int i = 1; i <= n; ++i) {
    beta[i] = k0.projective(xi(i));
    beta[i + n] = k0.coxeter_power(beta[i], -1);
  }
  auto pair = [&](int a, int b) { return k0.symmetric(beta[a], beta[b]); };

  // L~ = fixed + sum_t x_t unknown_t, 1-based indices
  std::vector<std::vector<Rat>> fixed(m + 1, std::vector<Rat>(m + 1, 0));
  std::vector<std::vector<int>> slot(m + 1, std::vector<int>(m + 1, -1));
  std::vector<std::vector<int>> sign(m + 1, std::vector<int>(m + 1, 0));
  LPermutationReport rep;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      Rat a = Rat(pair(i, j));
      Rat c = Rat(pair(i, j) + pair(i + n, j));
      Rat d = Rat(pair(i, j) + pair(i + n, j + n) + pair(i + n, j) - pair(j + n, i));
      fixed[i][j] = a, fixed[j][i] = -a;
      fixed[i + n][j] = c, fixed[j][i + n] = -c;
      fixed[i + n][j + n] = d, fixed[j + n][i + n] = -d;
      rep.prescribed += 3;
    }
  int unknowns = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      slot[i + n][j] = slot[j][i + n] = unknowns++;
      sign[i + n][j] = 1;
      sign[j][i + n] = -1;
    }

  // B~ in the permuted numbering: B'(sigma a, sigma b) = B~(a, b)
  const IntMatrix bt = b_matrix(build_z(q, 1));
  auto sigma = [&](int a) { return a <= n ? xi(a) : xi(a - n) + n; };
  std::vector<std::vector<Rat>> bp(m + 1, std::vector<Rat>(n + 1, 0));
  for (int a = 1; a <= m; ++a)
    for (int c = 1; c <= n; ++c) bp[sigma(a)][xi(c)] = Rat(bt(a - 1, c - 1));

  RationalField f;
  DenseMatrix<RationalField> lhs(f, m * n, unknowns), rhs(f, m * n, 1);
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c) {
      int row = (r - 1) * n + (c - 1);
      Rat target = (r == c) ? 2 : 0;
      Rat known = 0;
      for (int s = 1; s <= m; ++s) {
        Rat coef = -bp[s][c];
        if (slot[r][s] >= 0) lhs(row, slot[r][s]) += sign[r][s] * coef;
        known += fixed[r][s] * coef;
      }
      rhs(row, 0) = target - known;
    }
  auto sol = solve_unique(lhs, rhs);
  rep.l_tilde = IntMatrix(m, m);
  if (!sol) return rep;
  rep.solvable = true;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      Rat v = fixed[a][b];
      if (slot[a][b] >= 0) v += sign[a][b] * (*sol)(slot[a][b], 0);
      if (v.get_den() != 1) rep.solvable = false;
      rep.l_tilde(a - 1, b - 1) = v.get_num();
    }
  const IntMatrix l = Forms(q).l_matrix();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      if (l(a - 1, b - 1) != rep.l_tilde(sigma(a) - 1, sigma(b) - 1)) ++rep.mismatched;
  return rep;
}

}  // namespace qca
