#include "tpline/matrix.hpp"

#include <numeric>

namespace tpline {

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] == 0) fail(ErrorKind::Dimension, "index sets are 1-based");
    if (k > 0 && indices_[k] <= indices_[k - 1])
      fail(ErrorKind::Dimension, "index set " + to_string(*this) + " is not strictly increasing");
  }
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void IndexSet::check_within(std::size_t bound) const {
  if (!indices_.empty() && indices_.back() > bound)
    fail(ErrorKind::Dimension, "index " + std::to_string(indices_.back()) +
                                   " exceeds dimension " + std::to_string(bound));
}

std::vector<IndexSet> IndexSet::subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IndexSet IndexSet::range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> v;
  for (std::size_t i = first; i <= last; ++i) v.push_back(i);
  return IndexSet(std::move(v));
}

std::string to_string(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(set[k]);
  }
  return out + "}";
}

Rational det(const MatQ& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  Matrix<Integer> ints(n, n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) ints(r, c) = m(r, c).get_num() * (den / m(r, c).get_den());
    scale *= den;
  }
  return make_rational(det_bareiss(std::move(ints)), scale);
}

QuadNum det(const MatK& m) { return det_bareiss(m); }

namespace {

template <class T>
Matrix<T> gauss_jordan_inverse(const Matrix<T>& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == T{}) ++p;
    if (p == n) fail(ErrorKind::Singular, "matrix is singular: determinant is 0");
    if (p != k)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(p, c));
        std::swap(inv(k, c), inv(p, c));
      }
    const T pivot = a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) /= pivot;
      inv(k, c) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k) == T{}) continue;
      const T factor = a(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(k, c);
        inv(r, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(MatQ& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(p, c));
    const Rational pivot = a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) /= pivot;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

MatQ inverse(const MatQ& m) { return gauss_jordan_inverse(m); }
MatK inverse(const MatK& m) { return gauss_jordan_inverse(m); }

std::size_t rank(const MatQ& m) {
  MatQ a = m;
  return rref(a).size();
}

MatQ nullspace(const MatQ& m) {
  MatQ a = m;
  const auto pivots = rref(a);
  std::vector<std::size_t> free;
  for (std::size_t c = 0, k = 0; c < a.cols(); ++c) {
    if (k < pivots.size() && pivots[k] == c)
      ++k;
    else
      free.push_back(c);
  }
  MatQ basis(a.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(pivots[k], j) = -a(k, free[j]);
  }
  return basis;
}

MatK to_field(const MatQ& m) {
  return m.map<QuadNum>([](const Rational& v) { return QuadNum(v); });
}

}  // namespace tpline
