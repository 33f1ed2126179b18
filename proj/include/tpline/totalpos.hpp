#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tpline/matrix.hpp"

namespace tpline {

/// Four 4x2 blocks W1..W4, each spanning a 2-plane in R^4 (a line in RP^3).
class ConfigBlocks {
 public:
  /// Throws an input error unless every block is 4x2 of rank 2.
  explicit ConfigBlocks(std::array<MatQ, 4> blocks);

  /// Splits a 4x8 matrix into its four consecutive column pairs.
  static ConfigBlocks from_matrix(const MatQ& a);

  const MatQ& block(std::size_t k) const { return blocks_.at(k); }
  const std::array<MatQ, 4>& blocks() const noexcept { return blocks_; }

  /// A = [W1 W2 W3 W4], 4x8.
  MatQ concatenated() const;

  /// Every block replaced by h * block.
  ConfigBlocks transformed(const MatQ& h) const;

  friend bool operator==(const ConfigBlocks&, const ConfigBlocks&) = default;

 private:
  std::array<MatQ, 4> blocks_;
};

/// Positive Loewner-Whitney parameters a..p of a 4x4 totally positive matrix.
class LWParams {
 public:
  /// Throws a domain error naming the first non-positive parameter.
  explicit LWParams(std::array<Rational, 16> values);

  static LWParams all_ones();

  const Rational& operator[](char letter) const;
  const std::array<Rational, 16>& values() const noexcept { return values_; }

  friend bool operator==(const LWParams&, const LWParams&) = default;

 private:
  std::array<Rational, 16> values_;
};

struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Rational value;
};

struct TpReport {
  bool ok = true;
  std::optional<MinorWitness> witness;  // first non-positive minor
  std::size_t minors_checked = 0;
};

/// All 70 maximal minors of [W1 W2 W3 W4] strictly positive. The witness is
/// the lexicographically first failing column set.
TpReport check_tp_config(const ConfigBlocks& blocks);

/// All 69 minors of orders 1..4 strictly positive. Failing minors are
/// reported by order, then row set, then column set.
TpReport check_tp_square(const MatQ& x);

/// The fixed sign matrix [e4, -e3, e2, -e1].
const MatQ& sign_matrix_y();

struct CanonicalForm {
  MatQ g;  // applied change of basis, det(g) > 0
  MatQ x;  // g * [W1 W2]
  MatQ y;  // g * [W3 W4], always sign_matrix_y()
};

/// g = Y [W3 W4]^{-1}, X = g [W1 W2], with det(g) > 0 and X totally positive
/// asserted. Violations raise HypothesisViolation naming the witness minor.
CanonicalForm canonicalize(const ConfigBlocks& blocks);

/// The same map without the hypothesis assertions; only a singular
/// [W3 W4] is an error.
CanonicalForm canonical_transform(const ConfigBlocks& blocks);

/// L * diag(m, n, o, p) * U with the unipotent factors of the 16-parameter
/// chart.
MatQ lw_compose(const LWParams& params);

/// Inverse of lw_compose via LDU decomposition without pivoting.
LWParams lw_factor(const MatQ& x);

struct TpInstance {
  LWParams params;
  ConfigBlocks blocks;
};

/// Parameters p/q with 1 <= p, q <= bound drawn from mt19937_64(seed);
/// blocks are the columns of [lw_compose(params) Y].
TpInstance random_tp_instance(std::uint64_t seed, std::uint32_t bound);

std::string describe(const MinorWitness& witness);

}  // namespace tpline
