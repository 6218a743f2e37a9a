#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qca/int.hpp"

namespace qca {

// Dense row-major matrix of arbitrary-precision integers. Indices are 0-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const;
  bool is_skew_symmetric() const;
  bool is_zero() const;
  std::vector<std::vector<long long>> to_ll() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x);

Int determinant(const IntMatrix& a);

// Rational inverse; nullopt if singular.
std::optional<std::vector<std::vector<Rat>>> rational_inverse(const IntMatrix& a);

// Integral inverse; nullopt if singular or the inverse has a non-integer entry.
std::optional<IntMatrix> integer_inverse(const IntMatrix& a);

// Rational left inverse P (cols x rows) with P*a = 1, for a of full column rank.
std::optional<std::vector<std::vector<Rat>>> left_inverse(const IntMatrix& a);

}  // namespace qca
