#pragma once

#include <cstdint>
#include <random>

#include "tpline/rational.hpp"

namespace tpline::detail {

// Uniform in [1, bound] by rejection. mt19937_64 output is fixed by the
// standard, so draws are reproducible across platforms (unlike
// std::uniform_int_distribution).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return 1 + v % bound;
}

/// p/q with 1 <= p, q <= bound.
inline Rational positive_rational(std::mt19937_64& rng, std::uint64_t bound) {
  const auto num = draw(rng, bound);
  const auto den = draw(rng, bound);
  return make_rational(Integer(static_cast<unsigned long>(num)),
                       Integer(static_cast<unsigned long>(den)));
}

}  // namespace tpline::detail
