#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tpline/matrix.hpp"
#include "tpline/poly16.hpp"

namespace tpline {

using PolyMatrix = Matrix<Poly16>;

/// Entries of L * diag(m, n, o, p) * U over the sixteen parameters.
PolyMatrix symbolic_x();

/// The discriminant expanded from the 2x2 minors of symbolic_x().
Poly16 symbolic_discriminant();

struct PrintedFGH {
  Poly16 f;
  Poly16 g;
  Poly16 h;
};

/// The published F, G and H, transcribed term by term.
PrintedFGH printed_fgh();

/// m^2 n^2 (F G + H^2) from the published F, G, H.
Poly16 printed_rhs();

struct SpotEvaluation {
  std::array<Rational, 16> params;
  Rational lhs;
  Rational rhs;
};

struct IdentityCertificate {
  Poly16 lhs;
  Poly16 rhs;
  bool equal = false;
  Poly16 difference;  // lhs - rhs
  std::vector<SpotEvaluation> spots;
};

/// Symbolic comparison plus spot evaluations: the all-ones point first,
/// then spot_count points with parameters p/q, 1 <= p, q <= 1000, drawn
/// from mt19937_64(seed).
IdentityCertificate verify_identity(std::size_t spot_count, std::uint64_t seed);

}  // namespace tpline
