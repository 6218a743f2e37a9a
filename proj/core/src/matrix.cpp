#include "qca/matrix.hpp"

#include "qca/linalg.hpp"

namespace qca {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("invalid_input", "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Int(static_cast<long>(rows[i][j]));
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
  if (r0 + r > rows_ || c0 + c > cols_) throw Error("invalid_input", "matrix block out of range");
  IntMatrix b(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool IntMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<std::vector<long long>> IntMatrix::to_ll() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = qca::to_ll((*this)(i, j));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension_mismatch", "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("dimension_mismatch", "matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
  if (a.cols() != x.size()) throw Error("dimension_mismatch", "matrix-vector shape mismatch");
  std::vector<Int> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("dimension_mismatch", "determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {
DenseMatrix<RationalField> to_rational(const IntMatrix& a) {
  DenseMatrix<RationalField> m(RationalField{}, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  return m;
}
}  // namespace

std::optional<std::vector<std::vector<Rat>>> rational_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto inv = inverse(to_rational(a));
  if (!inv) return std::nullopt;
  std::vector<std::vector<Rat>> out(a.rows(), std::vector<Rat>(a.rows()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) out[i][j] = (*inv)(i, j);
  return out;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& a) {
  auto inv = rational_inverse(a);
  if (!inv) return std::nullopt;
  IntMatrix out(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) {
      const Rat& x = (*inv)[i][j];
      if (x.get_den() != 1) return std::nullopt;
      out(i, j) = x.get_num();
    }
  return out;
}

std::optional<std::vector<std::vector<Rat>>> left_inverse(const IntMatrix& a) {
  // P = (a^T a)^{-1} a^T
  IntMatrix at = a.transpose();
  auto g = rational_inverse(at * a);
  if (!g) return std::nullopt;
  std::size_t n = a.cols(), m = a.rows();
  std::vector<std::vector<Rat>> p(n, std::vector<Rat>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < n; ++k) s += (*g)[i][k] * Rat(at(k, j));
      p[i][j] = s;
    }
  return p;
}

}  // namespace qca
