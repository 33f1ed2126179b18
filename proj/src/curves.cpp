#include "tpline/curves.hpp"

#include <algorithm>

namespace tpline {

CurveSpec CurveSpec::rational_normal() {
  CurveSpec c;
  c.kind = Kind::RationalNormal;
  c.components = {std::vector<Rational>{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}};
  return c;
}

CurveSpec CurveSpec::polynomial(std::array<std::vector<Rational>, 4> components) {
  CurveSpec c;
  c.kind = Kind::Polynomial;
  c.components = std::move(components);
  return c;
}

Vec4 curve_eval(const CurveSpec& curve, const Rational& t, unsigned order) {
  if (sgn(t) < 0 || t > 1) fail(ErrorKind::Domain, "parameter " + to_string(t) + " outside [0, 1]");
  if (order > 3) fail(ErrorKind::Domain, "derivative order above 3");
  Vec4 out;
  for (std::size_t comp = 0; comp < 4; ++comp) {
    const auto& coeffs = curve.components[comp];
    // Horner on the order-th derivative: sum_k c_k k!/(k-order)! t^(k-order).
    Rational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > order;) {
      Integer falling = 1;
      for (std::size_t s = 0; s < order; ++s) falling *= static_cast<unsigned long>(k - s);
      acc = acc * t + coeffs[k] * falling;
    }
    out[comp] = acc;
  }
  return out;
}

namespace {

MatQ columns(std::initializer_list<Vec4> vs) {
  MatQ m(4, vs.size());
  std::size_t c = 0;
  for (const Vec4& v : vs) {
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = v[r];
    ++c;
  }
  return m;
}

Vec4 to_frame(const MatQ& m, const Vec4& v) {
  Vec4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < 4; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

void validate_times(const SampleTimes& ts) {
  if (sgn(ts[0]) <= 0 || ts[3] >= 1)
    fail(ErrorKind::Input, "sample times must lie strictly inside (0, 1)");
  for (std::size_t k = 1; k < 4; ++k)
    if (ts[k] <= ts[k - 1])
      fail(ErrorKind::Input, "sample times must be strictly increasing: " + to_string(ts[k - 1]) +
                                 " >= " + to_string(ts[k]));
}

Rational smallest_gap(const SampleTimes& ts) {
  Rational gap = 1 - ts[3];
  for (std::size_t k = 1; k < 4; ++k) gap = std::min(gap, Rational(ts[k] - ts[k - 1]));
  return gap;
}

}  // namespace

MatQ frenet_basis(const CurveSpec& curve) {
  const MatQ wronski = columns({curve_eval(curve, 0, 0), curve_eval(curve, 0, 1),
                                curve_eval(curve, 0, 2), curve_eval(curve, 0, 3)});
  if (sgn(det(wronski)) == 0)
    fail(ErrorKind::Domain, "not convex at 0: derivatives of orders 0..3 are linearly dependent");
  return inverse(wronski);
}

MatQ tangent_block(const CurveSpec& curve, const Rational& t) {
  const MatQ frame = frenet_basis(curve);
  MatQ block = frame * columns({curve_eval(curve, t, 0), curve_eval(curve, t, 1)});
  if (rank(block) != 2)
    fail(ErrorKind::Degenerate, "cusp at t = " + to_string(t) + ": value and tangent are dependent");
  return block;
}

unsigned kappa(const IndexSet& rows) {
  unsigned count = 0;
  for (std::size_t k = 1; k <= 4; ++k)
    if (rows.contains(2 * k - 1) && rows.contains(2 * k)) ++count;
  return count;
}

SampleReport lemma_sample(const CurveSpec& curve, const SampleTimes& ts, const Rational& epsilon) {
  validate_times(ts);
  if (sgn(epsilon) <= 0) fail(ErrorKind::Input, "epsilon must be positive");
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational next = k + 1 < 4 ? ts[k + 1] : Rational(1);
    const bool strict = k + 1 < 4;
    const Rational shifted = ts[k] + epsilon;
    if (strict ? shifted >= next : shifted > next)
      fail(ErrorKind::Input, "epsilon " + to_string(epsilon) + " breaks the ordering t" +
                                 std::to_string(2 * k + 1) + " + epsilon < next sample");
  }
  const MatQ frame = frenet_basis(curve);
  SampleReport report;
  report.ts = ts;
  report.epsilon = epsilon;
  report.w = MatQ(8, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec4 value = to_frame(frame, curve_eval(curve, ts[k], 0));
    const Vec4 tangent = to_frame(frame, curve_eval(curve, ts[k], 1));
    for (std::size_t c = 0; c < 4; ++c) {
      report.w(2 * k, c) = value[c];
      report.w(2 * k + 1, c) = value[c] + epsilon * tangent[c];
    }
  }
  const IndexSet all_cols = IndexSet::range(1, 4);
  report.ok = true;
  for (const IndexSet& rows : IndexSet::subsets(8, 4)) {
    Rational value = minor_det(report.w, rows, all_cols);
    report.ok = report.ok && sgn(value) > 0;
    report.minors.push_back(SampledMinor{rows, std::move(value), kappa(rows)});
  }
  return report;
}

Rational epsilon_threshold(const CurveSpec& curve, const SampleTimes& ts) {
  validate_times(ts);
  Rational epsilon = smallest_gap(ts) / 4;
  for (int halvings = 0; halvings <= 64; ++halvings) {
    if (lemma_sample(curve, ts, epsilon).ok) return epsilon;
    epsilon /= 2;
  }
  fail(ErrorKind::SearchFailure, "no epsilon found after 64 halvings");
}

std::vector<ScalingRow> scaling_check(const CurveSpec& curve, const SampleTimes& ts,
                                      const Rational& epsilon) {
  const SampleReport full = lemma_sample(curve, ts, epsilon);
  const SampleReport half = lemma_sample(curve, ts, Rational(epsilon / 2));
  std::vector<ScalingRow> rows;
  for (std::size_t i = 0; i < full.minors.size(); ++i) {
    ScalingRow row;
    row.rows = full.minors[i].rows;
    row.kappa = full.minors[i].kappa;
    if (sgn(full.minors[i].value) != 0) {
      row.ratio = half.minors[i].value / full.minors[i].value;
      Rational expected = 1;
      for (unsigned s = 0; s < row.kappa; ++s) expected /= 2;
      row.ok = row.ratio >= expected / 2 && row.ratio <= expected * 2;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

TangentConfig tangent_config(const CurveSpec& curve, const SampleTimes& ts) {
  validate_times(ts);
  const Rational epsilon = epsilon_threshold(curve, ts);
  const SampleReport sample = lemma_sample(curve, ts, epsilon);
  const MatQ wt = sample.w.transpose();
  ConfigBlocks sampled({wt.col_block(0, 2), wt.col_block(2, 2), wt.col_block(4, 2), wt.col_block(6, 2)});
  const TpReport tp = check_tp_config(sampled);
  if (!tp.ok)
    fail(ErrorKind::HypothesisViolation,
         "sampled tangent configuration failed certification; " + describe(*tp.witness));
  ConfigBlocks exact({tangent_block(curve, ts[0]), tangent_block(curve, ts[1]),
                      tangent_block(curve, ts[2]), tangent_block(curve, ts[3])});
  return TangentConfig{std::move(sampled), std::move(exact), epsilon};
}

ConvexityReport convexity_sample_check(const CurveSpec& curve, std::size_t grid_size) {
  if (grid_size < 4) fail(ErrorKind::Input, "grid size must be at least 4");
  ConvexityReport report;
  report.grid_size = grid_size;
  MatQ frame;
  try {
    frame = frenet_basis(curve);
  } catch (const Error& e) {
    report.ok = false;
    report.note = std::string("no Frenet frame at 0: ") + e.what();
    return report;
  }
  std::vector<Vec4> points;
  std::vector<Rational> grid;
  for (std::size_t i = 0; i < grid_size; ++i) {
    grid.push_back(make_rational(static_cast<unsigned long>(i), static_cast<unsigned long>(grid_size - 1)));
    points.push_back(to_frame(frame, curve_eval(curve, grid.back(), 0)));
  }
  for (const IndexSet& pick : IndexSet::subsets(grid_size, 4)) {
    MatQ m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = points[pick[r] - 1][c];
    const Rational value = det(m);
    ++report.checked;
    if (sgn(value) <= 0) {
      if (report.failures == 0) {
        report.first_failure_ts = {grid[pick[0] - 1], grid[pick[1] - 1], grid[pick[2] - 1],
                                   grid[pick[3] - 1]};
        report.first_failure_det = value;
      }
      ++report.failures;
    }
  }
  report.ok = report.failures == 0;
  report.note = report.ok ? "sampled-consistent (necessary condition only)"
                          : "sampled determinants not all positive";
  return report;
}

Integer schubert_count(int k, int n) {
  if (k < 0 || n <= k)
    fail(ErrorKind::Domain, "schubert_count needs 0 <= k < n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  auto factorial = [](long v) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
    return out;
  };
  Integer num = factorial(static_cast<long>(k + 1) * (n - k));
  for (int i = 1; i <= n - k - 1; ++i) num *= factorial(i);
  Integer den = 1;
  for (int i = k + 1; i <= n; ++i) den *= factorial(i);
  if (num % den != 0) fail(ErrorKind::Internal, "Schubert count is not an integer");
  return num / den;
}

}  // namespace tpline
