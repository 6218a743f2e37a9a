#include "qca/grassmannian.hpp"

#include <algorithm>
#include <functional>

namespace qca {

namespace {

using Mat = DenseMatrix<PrimeField>;

// Row-reduced basis of the span of the given vectors.
Mat span_rows(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& vectors, std::size_t d) {
  Mat a(f, vectors.size(), d);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = vectors[i][j];
  auto e = rref(a);
  Mat r(f, e.pivots.size(), d);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) r(i, j) = e.m(i, j);
  return r;
}

std::vector<std::vector<std::int64_t>> rows_of(const Mat& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

// Subrepresentations U with dim U = e. Constraints: U_s contains phi_a(U_t) for each arrow a: s -> t.
// Vertices in an independent set are counted by Gaussian binomials once their neighbours are fixed;
// the others are enumerated as subspaces A <= U <= W of the right dimension.
class Counter {
 public:
  Counter(const ModularRep& m, const std::vector<int>& e) : m_(m), e_(e), chosen_(m.quiver.size()) {
    const int n = m.quiver.size();
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    for (const auto& a : m.quiver.arrows()) adj[a.source][a.target] = adj[a.target][a.source] = true;
    // heaviest independent set, weight e(d - e); n is small
    long long best = -1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      long long wgt = 0;
      for (int i = 1; i <= n && ok; ++i) {
        if (!(mask >> (i - 1) & 1)) continue;
        wgt += 1 + static_cast<long long>(e[i - 1]) * (m.dims[i - 1] - e[i - 1]);
        for (int j = i + 1; j <= n; ++j)
          if ((mask >> (j - 1) & 1) && adj[i][j]) ok = false;
      }
      if (ok && wgt > best) best = wgt, best_mask = mask;
    }
    for (int j = n; j >= 1; --j) {
      if (best_mask >> (j - 1) & 1)
        counted_.push_back(j);
      else
        order_.push_back(j);
    }
    done_.assign(n + 1, false);
  }

  // upper bound on the number of enumerated tuples
  Int enumeration_size() const {
    Int r = 1;
    for (int j : order_) r *= gaussian_binomial(m_.dims[j - 1], e_[j - 1], Int(static_cast<long>(m_.field.p)));
    return r;
  }

  Int run() { return step(0); }

 private:
  const ModularRep& m_;
  const std::vector<int>& e_;
  std::vector<Mat> chosen_;  // rows span U_j
  std::vector<bool> done_;
  std::vector<int> order_, counted_;

  struct Bounds {
    Mat lower;  // rows span A
    Mat upper;  // rows span W
    bool consistent = true;
  };

  Bounds bounds(int j) const {
    const PrimeField& f = m_.field;
    const std::size_t d = m_.dims[j - 1];
    std::vector<std::vector<std::int64_t>> req;
    std::vector<std::vector<std::int64_t>> eqs;  // linear forms cutting out W
    for (std::size_t k = 0; k < m_.quiver.arrows().size(); ++k) {
      const auto& a = m_.quiver.arrows()[k];
      const Mat& map = m_.maps[k];  // dims[s] x dims[t]
      if (a.source == j && done_[a.target]) {
        const Mat& u = chosen_[a.target - 1];
        for (std::size_t r = 0; r < u.rows(); ++r) {
          std::vector<std::int64_t> img(d, 0);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = 0; c < u.cols(); ++c) img[i] = f.add(img[i], f.mul(map(i, c), u(r, c)));
          req.push_back(std::move(img));
        }
      }
      if (a.target == j && done_[a.source]) {
        // x with phi x in U_s: y . phi x = 0 for y in the annihilator of U_s
        const Mat& u = chosen_[a.source - 1];
        const std::size_t ds = m_.dims[a.source - 1];
        Mat ann = nullspace(u);
        for (std::size_t c = 0; c < ann.cols(); ++c) {
          std::vector<std::int64_t> form(d, 0);
          for (std::size_t x = 0; x < d; ++x)
            for (std::size_t i = 0; i < ds; ++i) form[x] = f.add(form[x], f.mul(ann(i, c), map(i, x)));
          eqs.push_back(std::move(form));
        }
      }
    }
    Bounds b;
    b.lower = span_rows(f, req, d);
    Mat cut(f, eqs.size(), d);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      for (std::size_t x = 0; x < d; ++x) cut(i, x) = eqs[i][x];
    Mat ns = nullspace(cut);
    Mat w(f, ns.cols(), d);
    for (std::size_t c = 0; c < ns.cols(); ++c)
      for (std::size_t x = 0; x < d; ++x) w(c, x) = ns(x, c);
    b.upper = span_rows(f, rows_of(w), d);
    // A inside W: rank of A + W equals rank of W
    auto both = rows_of(b.upper);
    for (auto& r : rows_of(b.lower)) both.push_back(r);
    b.consistent = span_rows(f, both, d).rows() == b.upper.rows();
    return b;
  }

  Int step(std::size_t idx) {
    const PrimeField& f = m_.field;
    if (idx == order_.size()) {
      Int r = 1;
      for (int j : counted_) {
        Bounds b = bounds(j);
        if (!b.consistent) return 0;
        const int lo = static_cast<int>(b.lower.rows()), hi = static_cast<int>(b.upper.rows());
        r *= gaussian_binomial(hi - lo, e_[j - 1] - lo, Int(static_cast<long>(f.p)));
        if (r == 0) return 0;
      }
      return r;
    }
    const int j = order_[idx];
    const std::size_t d = m_.dims[j - 1];
    Bounds b = bounds(j);
    if (!b.consistent) return 0;
    const int r = static_cast<int>(b.lower.rows());
    const int k = e_[j - 1];
    if (r > k || k > static_cast<int>(b.upper.rows())) return 0;
    // complement of A inside W
    auto basis = rows_of(b.lower);
    std::vector<std::vector<std::int64_t>> comp;
    for (auto& row : rows_of(b.upper)) {
      basis.push_back(row);
      if (span_rows(f, basis, d).rows() == basis.size())
        comp.push_back(row);
      else
        basis.pop_back();
    }
    const int extra = k - r;
    const int free_dim = static_cast<int>(comp.size());
    Int total = 0;
    done_[j] = true;
    // enumerate reduced echelon forms of extra x free_dim matrices of full rank
    std::vector<int> piv(extra);
    std::function<void(int, int)> choose = [&](int i, int start) {
      if (i == extra) {
        std::vector<std::pair<int, int>> slots;  // (row, column) of free entries
        for (int row = 0; row < extra; ++row)
          for (int c = piv[row] + 1; c < free_dim; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.push_back({row, c});
        std::vector<std::int64_t> vals(slots.size(), 0);
        while (true) {
          Mat u(f, k, d);
          for (int a = 0; a < r; ++a)
            for (std::size_t c = 0; c < d; ++c) u(a, c) = b.lower(a, c);
          for (int row = 0; row < extra; ++row) {
            std::vector<std::int64_t> coef(free_dim, 0);
            coef[piv[row]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
              if (slots[s].first == row) coef[slots[s].second] = vals[s];
            for (int c = 0; c < free_dim; ++c) {
              if (coef[c] == 0) continue;
              for (std::size_t x = 0; x < d; ++x) u(r + row, x) = f.add(u(r + row, x), f.mul(coef[c], comp[c][x]));
            }
          }
          chosen_[j - 1] = std::move(u);
          total += step(idx + 1);
          std::size_t pos = 0;
          while (pos < vals.size() && ++vals[pos] == f.p) vals[pos++] = 0;
          if (pos == vals.size()) break;
        }
        return;
      }
      for (int c = start; c <= free_dim - (extra - i); ++c) {
        piv[i] = c;
        choose(i + 1, c + 1);
      }
    };
    choose(0, 0);
    done_[j] = false;
    return total;
  }
};

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Int gaussian_binomial(int n, int k, const Int& q) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    Int a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

Int grass_count(const ModularRep& m, const std::vector<int>& e, const GrassOptions& opt) {
  m.validate();
  if (static_cast<int>(e.size()) != m.quiver.size()) throw Error("dimension_mismatch", "e has the wrong length");
  if (m.total_dim() > opt.max_dim)
    throw Error("resource_cap", "module dimension " + std::to_string(m.total_dim()) + " exceeds the cap " +
                                    std::to_string(opt.max_dim));
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > m.dims[i]) return 0;
  Counter c(m, e);
  if (c.enumeration_size() > Int(static_cast<long>(opt.max_points)))
    throw Error("resource_cap", "subspace enumeration exceeds the point budget");
  return c.run();
}

Int GrassPolynomial::at(const Int& q) const {
  Int r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * q + *it;
  return r;
}

std::vector<std::int64_t> good_primes(const RationalRep& m, std::size_t count) {
  std::vector<std::int64_t> out;
  const int end_dim = hom_dim(m, m);
  for (std::int64_t p = 2; out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    auto red = reduce_mod(m, p);
    if (!red) continue;
    if (hom_dim(*red, *red) != end_dim) continue;
    out.push_back(p);
  }
  return out;
}

GrassPolynomial grass_polynomial(const RationalRep& m, const std::vector<int>& e, const GrassOptions& opt) {
  if (static_cast<int>(e.size()) != m.quiver.size()) throw Error("dimension_mismatch", "e has the wrong length");
  if (m.total_dim() > opt.max_dim)
    throw Error("resource_cap", "module dimension " + std::to_string(m.total_dim()) + " exceeds the cap " +
                                    std::to_string(opt.max_dim));
  int bound = 0;
  for (std::size_t i = 0; i < e.size(); ++i) bound += e[i] * (m.dims[i] - e[i]);
  if (bound < 0) bound = 0;
  GrassPolynomial out;
  out.e = e;
  out.primes = good_primes(m, bound + 1 + std::max(1, opt.extra_primes));
  std::vector<Int> counts;
  for (auto p : out.primes) counts.push_back(grass_count(*reduce_mod(m, p), e, opt));
  // Newton interpolation on the first bound+1 points
  const int npts = bound + 1;
  std::vector<Rat> xs(npts), dd(npts);
  for (int i = 0; i < npts; ++i) {
    xs[i] = Rat(static_cast<long>(out.primes[i]));
    dd[i] = Rat(counts[i]);
  }
  for (int level = 1; level < npts; ++level)
    for (int i = npts - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rat> poly(1, dd[npts - 1]);
  for (int i = npts - 2; i >= 0; --i) {
    // poly = poly * (q - xs[i]) + dd[i]
    std::vector<Rat> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  for (const auto& c : poly) {
    if (c.get_den() != 1)
      throw Error("non_polynomial_count", "interpolated point count has a non-integer coefficient");
    if (c < 0) throw Error("non_polynomial_count", "interpolated point count has a negative coefficient");
    out.coeffs.push_back(c.get_num());
  }
  for (std::size_t i = npts; i < out.primes.size(); ++i)
    if (out.at(Int(static_cast<long>(out.primes[i]))) != counts[i])
      throw Error("non_polynomial_count", "point count at p = " + std::to_string(out.primes[i]) +
                                               " disagrees with the interpolating polynomial");
  return out;
}

}  // namespace qca
