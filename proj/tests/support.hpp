// Shared fixtures and independent oracles for the test suites.
#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "tpline/curves.hpp"
#include "tpline/identity.hpp"
#include "tpline/totalpos.hpp"
#include "tpline/transversal.hpp"

namespace tpline::testing {

// lw_compose with every parameter equal to 1.
inline MatQ x1() {
  return MatQ{{1, 3, 3, 1}, {3, 10, 11, 4}, {3, 11, 14, 6}, {1, 4, 6, 4}};
}

inline ConfigBlocks x1_blocks() { return ConfigBlocks::from_matrix(hcat(x1(), sign_matrix_y())); }

// Leibniz sum over permutations; shares nothing with the elimination code.
template <class T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? T(total - term) : T(total + term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rational random_rational(std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return make_rational(num(rng), den(rng));
}

inline Rational random_positive(std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<int> v(1, span);
  return make_rational(v(rng), v(rng));
}

inline MatQ random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span = 20) {
  MatQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, span);
  return m;
}

inline LWParams random_params(std::mt19937_64& rng, int span = 20) {
  std::array<Rational, 16> v;
  for (auto& x : v) x = random_positive(rng, span);
  return LWParams(v);
}

// Random 4x4 matrix with positive determinant.
inline MatQ random_positive_det(std::mt19937_64& rng) {
  while (true) {
    MatQ h = random_matrix(rng, 4, 4, 9);
    const int s = sgn(det(h));
    if (s == 0) continue;
    if (s < 0)
      for (std::size_t c = 0; c < 4; ++c) h(0, c) = -h(0, c);
    return h;
  }
}

// Strictly increasing rationals in (0, 1) with denominator 1000.
inline SampleTimes random_times(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(1, 999);
  while (true) {
    std::array<int, 4> raw{v(rng), v(rng), v(rng), v(rng)};
    std::sort(raw.begin(), raw.end());
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end()) continue;
    return {make_rational(raw[0], 1000), make_rational(raw[1], 1000), make_rational(raw[2], 1000),
            make_rational(raw[3], 1000)};
  }
}

}  // namespace tpline::testing
