#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpline/matrix.hpp"
#include "tpline/totalpos.hpp"

namespace tpline {

using Vec4 = std::array<Rational, 4>;

/// A lifted curve [0, 1] -> R^4 \ 0 with polynomial components.
struct CurveSpec {
  enum class Kind { RationalNormal, Polynomial };

  Kind kind = Kind::RationalNormal;
  // Ascending coefficients per component.
  std::array<std::vector<Rational>, 4> components;

  /// t -> (1, t, t^2, t^3).
  static CurveSpec rational_normal();
  static CurveSpec polynomial(std::array<std::vector<Rational>, 4> components);

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// order-th derivative of the lift at t, t in [0, 1], order <= 3.
Vec4 curve_eval(const CurveSpec& curve, const Rational& t, unsigned order);

/// Inverse of the Wronski matrix at 0; maps raw coordinates to coordinates
/// in the basis e_j = lift^{(j-1)}(0).
MatQ frenet_basis(const CurveSpec& curve);

/// Columns lift(t) and lift'(t) in Frenet coordinates.
MatQ tangent_block(const CurveSpec& curve, const Rational& t);

using SampleTimes = std::array<Rational, 4>;

struct SampledMinor {
  IndexSet rows;
  Rational value;
  unsigned kappa = 0;
};

struct SampleReport {
  SampleTimes ts;
  Rational epsilon;
  MatQ w;  // 8x4, Frenet coordinates
  std::vector<SampledMinor> minors;  // 70, lexicographic row sets
  bool ok = false;
};

/// Number of pairs {2k-1, 2k} contained in the 4-subset of rows 1..8.
unsigned kappa(const IndexSet& rows);

/// Rows 2k-1 = lift(t_k), rows 2k = lift(t_k) + epsilon lift'(t_k) with all
/// 70 maximal minors.
SampleReport lemma_sample(const CurveSpec& curve, const SampleTimes& ts,
                          const Rational& epsilon);

/// First epsilon = gap / 2^j, j >= 2, for which lemma_sample is ok, where gap
/// is the smallest of t3 - t1, t5 - t3, t7 - t5, 1 - t7.
Rational epsilon_threshold(const CurveSpec& curve, const SampleTimes& ts);

struct ScalingRow {
  IndexSet rows;
  unsigned kappa = 0;
  Rational ratio;  // W_I(epsilon / 2) / W_I(epsilon)
  bool ok = false;  // ratio within a factor 2 of 2^-kappa
};

std::vector<ScalingRow> scaling_check(const CurveSpec& curve, const SampleTimes& ts,
                                      const Rational& epsilon);

struct TangentConfig {
  // Sampled pair basis (lift(t), lift(t) + eps lift'(t)); certified to pass
  // check_tp_config.
  ConfigBlocks blocks;
  // Exact (value, derivative) basis of the same four planes.
  ConfigBlocks tangent_blocks;
  Rational epsilon;
};

TangentConfig tangent_config(const CurveSpec& curve, const SampleTimes& ts);

struct ConvexityReport {
  bool ok = false;
  std::size_t grid_size = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::array<Rational, 4>> first_failure_ts;
  std::optional<Rational> first_failure_det;
  std::string note;
};

/// Determinants of lift values at every 4-subset of the grid i / (N - 1),
/// in Frenet coordinates. A passing report is a necessary condition for
/// convexity only.
ConvexityReport convexity_sample_check(const CurveSpec& curve, std::size_t grid_size);

/// Degree of the Grassmannian of projective k-planes in P^n.
Integer schubert_count(int k, int n);

}  // namespace tpline
