#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpline/error.hpp"
#include "tpline/quadnum.hpp"
#include "tpline/rational.hpp"

namespace tpline {

/// Strictly increasing 1-based positions selecting rows or columns.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  explicit IndexSet(std::vector<std::size_t> indices);

  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  bool contains(std::size_t index) const;

  /// Throws a dimension error unless every index is <= bound.
  void check_within(std::size_t bound) const;

  /// All k-subsets of {1..n} in lexicographic order.
  static std::vector<IndexSet> subsets(std::size_t n, std::size_t k);
  static IndexSet range(std::size_t first, std::size_t last);

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

std::string to_string(const IndexSet& set);

/// Dense row-major matrix over an exact ring. Dimensions are fixed at
/// construction.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> col(std::size_t c) const;

  /// Columns [first, first + count), 0-based.
  Matrix col_block(std::size_t first, std::size_t count) const;
  Matrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  Matrix transpose() const;

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatQ = Matrix<Rational>;
using MatK = Matrix<QuadNum>;

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) fail(ErrorKind::Dimension, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
std::vector<T> Matrix<T>::col(std::size_t c) const {
  std::vector<T> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

template <class T>
Matrix<T> Matrix<T>::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) fail(ErrorKind::Dimension, "column block out of range");
  Matrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

template <class T>
Matrix<T> Matrix<T>::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  rows.check_within(rows_);
  cols.check_within(cols_);
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = (*this)(rows[i] - 1, cols[j] - 1);
  return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  if (lhs.cols() != rhs.rows()) fail(ErrorKind::Dimension, "product shape mismatch");
  Matrix<T> out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == T{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    fail(ErrorKind::Dimension, "sum shape mismatch");
  Matrix<T> out = lhs;
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) += rhs(i, j);
  return out;
}

/// Side-by-side concatenation [lhs | rhs].
template <class T>
Matrix<T> hcat(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  if (lhs.rows() != rhs.rows()) fail(ErrorKind::Dimension, "hcat row mismatch");
  Matrix<T> out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = lhs(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, lhs.cols() + c) = rhs(r, c);
  }
  return out;
}

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (!m.is_square())
    fail(ErrorKind::Dimension, std::string(what) + ": matrix is " +
                                   std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + ", not square");
}

/// Laplace expansion along the first row. Division-free, so it works over
/// any commutative ring (used for polynomial matrices and as the
/// cross-check of the elimination determinant).
template <class T>
T det_cofactor(const Matrix<T>& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T total{};
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == T{}) continue;
    Matrix<T> sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) sub(r - 1, kk++) = m(r, k);
    T term = m(0, c) * det_cofactor(sub);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Fraction-free (Bareiss) elimination with row pivoting. Every division
/// is exact, so this is valid over any field or integral domain whose
/// division is exact on the intermediate values.
template <class T>
T det_bareiss(Matrix<T> m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T{}) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == T{}) ++p;
      if (p == n) return T{};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v / prev;
      }
      m(i, k) = T{};
    }
    prev = m(k, k);
  }
  T result = m(n - 1, n - 1);
  return negate ? T(-result) : result;
}

/// Exact determinant over Q: rows are scaled to integers and the
/// integer matrix is reduced fraction-free.
Rational det(const MatQ& m);
QuadNum det(const MatK& m);

/// Determinant of the submatrix in rows I and columns J.
template <class T>
T minor_det(const Matrix<T>& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size())
    fail(ErrorKind::Dimension, "minor: |I| = " + std::to_string(rows.size()) +
                                   " but |J| = " + std::to_string(cols.size()));
  return det(m.submatrix(rows, cols));
}

/// Gauss-Jordan inverse over a field.
MatQ inverse(const MatQ& m);
MatK inverse(const MatK& m);

/// Rank by elimination over Q.
std::size_t rank(const MatQ& m);

/// Basis of the right nullspace {v : m v = 0}, as columns of the result.
MatQ nullspace(const MatQ& m);

MatK to_field(const MatQ& m);

}  // namespace tpline
