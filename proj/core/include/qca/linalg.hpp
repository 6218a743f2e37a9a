#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qca/int.hpp"

namespace qca {

struct RationalField {
  using value_type = Rat;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  bool is_zero(const value_type& a) const { return a == 0; }
};

// Arithmetic modulo a prime p < 2^31.
struct PrimeField {
  using value_type = std::int64_t;
  std::int64_t p = 2;
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type add(value_type a, value_type b) const { value_type r = a + b; return r >= p ? r - p : r; }
  value_type sub(value_type a, value_type b) const { value_type r = a - b; return r < 0 ? r + p : r; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inv(value_type a) const {
    // Fermat
    value_type r = 1, b = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type reduce(long long x) const { long long r = x % p; return r < 0 ? r + p : r; }
};

template <class F>
class DenseMatrix {
 public:
  using T = typename F::value_type;
  DenseMatrix() = default;
  DenseMatrix(F f, std::size_t r, std::size_t c) : f_(f), rows_(r), cols_(c), a_(r * c, f.zero()) {}

  const F& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  F f_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class F>
DenseMatrix<F> mul(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  if (a.cols() != b.rows()) throw Error("dimension_mismatch", "matrix product shape mismatch");
  const F& f = a.field();
  DenseMatrix<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class F>
struct Echelon {
  DenseMatrix<F> m;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form.
template <class F>
Echelon<F> rref(DenseMatrix<F> m) {
  const F f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && f.is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    auto iv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), iv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const DenseMatrix<F>& m) {
  return rref(m).pivots.size();
}

// Columns of the result form a basis of {x : m x = 0}.
template <class F>
DenseMatrix<F> nullspace(const DenseMatrix<F>& m) {
  const F f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  DenseMatrix<F> basis(f, m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = f.sub(f.zero(), e.m(r, free[k]));
  }
  return basis;
}

template <class F>
std::optional<DenseMatrix<F>> inverse(const DenseMatrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const F f = a.field();
  std::size_t n = a.rows();
  DenseMatrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  DenseMatrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

// Solves a x = b for x when b lies in the column span of a with a of full column rank.
template <class F>
std::optional<DenseMatrix<F>> solve_unique(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  const F f = a.field();
  std::size_t n = a.cols(), k = b.cols();
  DenseMatrix<F> aug(f, a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto e = rref(aug);
  if (e.pivots.size() > n) {
    if (e.pivots[n] < n) return std::nullopt;
  }
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] >= n) return std::nullopt;  // inconsistent
  if (e.pivots.size() != n) return std::nullopt;  // not full column rank
  DenseMatrix<F> x(f, n, k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < k; ++j) x(e.pivots[r], j) = e.m(r, n + j);
  return x;
}

}  // namespace qca
