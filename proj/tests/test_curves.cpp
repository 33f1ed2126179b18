#include <doctest.h>

#include "support.hpp"

using namespace tpline;
using namespace tpline::testing;

namespace {

const CurveSpec kMoment = CurveSpec::rational_normal();

SampleTimes even_times() {
  return {make_rational(1, 8), make_rational(3, 8), make_rational(5, 8), make_rational(7, 8)};
}

Rational power_of_half(unsigned k) {
  Rational out = 1;
  for (unsigned s = 0; s < k; ++s) out /= 2;
  return out;
}

}  // namespace

TEST_CASE("curve evaluation") {
  const Rational half = make_rational(1, 2);
  CHECK(curve_eval(kMoment, half, 0) == Vec4{1, half, make_rational(1, 4), make_rational(1, 8)});
  CHECK(curve_eval(kMoment, half, 1) == Vec4{0, 1, 1, make_rational(3, 4)});
  CHECK(curve_eval(kMoment, half, 2) == Vec4{0, 0, 2, 3});
  CHECK(curve_eval(kMoment, half, 3) == Vec4{0, 0, 0, 6});
  CHECK_THROWS_AS(curve_eval(kMoment, 2, 0), Error);
  CHECK_THROWS_AS(curve_eval(kMoment, half, 4), Error);
}

TEST_CASE("Frenet basis") {
  const MatQ expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, make_rational(1, 2), 0},
                      {0, 0, 0, make_rational(1, 6)}};
  CHECK(frenet_basis(kMoment) == expected);
  const CurveSpec flat = CurveSpec::polynomial({std::vector<Rational>{1}, {0, 1}, {0, 0, 1}, {}});
  try {
    frenet_basis(flat);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("tangent block") {
  const MatQ block = tangent_block(kMoment, 1);
  const MatQ expected{{1, 0}, {1, 1}, {make_rational(1, 2), 1}, {make_rational(1, 6), make_rational(1, 2)}};
  CHECK(block == expected);
}

TEST_CASE("kappa counts consecutive pairs") {
  CHECK(kappa({1, 2, 3, 4}) == 2);
  CHECK(kappa({1, 3, 5, 7}) == 0);
  CHECK(kappa({2, 3, 4, 5}) == 1);
  CHECK(kappa({5, 6, 7, 8}) == 2);
  CHECK(kappa({1, 2, 4, 7}) == 1);
}

TEST_CASE("sampled minors") {
  const SampleReport report = lemma_sample(kMoment, even_times(), make_rational(1, 100));
  CHECK(report.ok);
  CHECK(report.minors.size() == 70);
  CHECK(report.w.rows() == 8);
  for (const SampledMinor& m : report.minors) {
    CHECK(m.value > 0);
    CHECK(m.kappa == kappa(m.rows));
  }
  try {
    lemma_sample(kMoment, even_times(), 1);
    FAIL("expected input error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
  CHECK_THROWS_AS(lemma_sample(kMoment, even_times(), 0), Error);
  CHECK_THROWS_AS(lemma_sample(kMoment, {make_rational(1, 2), make_rational(1, 4),
                                         make_rational(5, 8), make_rational(7, 8)},
                               make_rational(1, 100)),
                  Error);
}

// Rows 2k with 2k-1 absent carry lift + eps lift' alone, so only the other
// index sets are homogeneous in epsilon.
bool homogeneous(const IndexSet& rows) {
  for (std::size_t k = 1; k <= 4; ++k)
    if (rows.contains(2 * k) && !rows.contains(2 * k - 1)) return false;
  return true;
}

TEST_CASE("sampled minors scale as epsilon to the kappa") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const SampleTimes ts = random_times(rng);
    const Rational eps = epsilon_threshold(kMoment, ts);
    const SampleReport a = lemma_sample(kMoment, ts, eps);
    const SampleReport b = lemma_sample(kMoment, ts, Rational(eps / 3));
    for (std::size_t i = 0; i < a.minors.size(); ++i) {
      if (!homogeneous(a.minors[i].rows)) continue;
      Rational third = 1;
      for (unsigned s = 0; s < a.minors[i].kappa; ++s) third /= 3;
      CHECK(b.minors[i].value == a.minors[i].value * third);
    }
    for (const ScalingRow& row : scaling_check(kMoment, ts, eps)) {
      CHECK(row.ok);
      if (homogeneous(row.rows)) CHECK(row.ratio == power_of_half(row.kappa));
    }
  }
}

TEST_CASE("epsilon threshold") {
  const Rational eps = epsilon_threshold(kMoment, even_times());
  CHECK(eps > 0);
  CHECK(eps <= make_rational(1, 32));
  CHECK(lemma_sample(kMoment, even_times(), eps).ok);
  const SampleTimes clustered{make_rational(1000, 10000), make_rational(1001, 10000),
                              make_rational(1002, 10000), make_rational(1003, 10000)};
  const Rational tight = epsilon_threshold(kMoment, clustered);
  CHECK(tight <= make_rational(1, 40000));
  CHECK(lemma_sample(kMoment, clustered, tight).ok);
}

TEST_CASE("tangent configurations") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    const SampleTimes ts = random_times(rng);
    const TangentConfig cfg = tangent_config(kMoment, ts);
    CHECK(check_tp_config(cfg.blocks).ok);
    // The sampled pair spans the same plane as (value, derivative).
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(rank(hcat(cfg.blocks.block(k), cfg.tangent_blocks.block(k))) == 2);
    // The exact basis is not itself totally positive in this ordering.
    CHECK_FALSE(check_tp_config(cfg.tangent_blocks).ok);
    const TransversalSolution sol = solve_transversals(cfg.blocks);
    CHECK(sol.warnings.empty());
    for (std::size_t k = 0; k < 4; ++k)
      for (const LineRep& line : sol.lines)
        CHECK(det(hcat(to_field(cfg.tangent_blocks.block(k)), line.span)).is_zero());
  }
}

TEST_CASE("convexity sampling") {
  const ConvexityReport fine = convexity_sample_check(kMoment, 12);
  CHECK(fine.ok);
  CHECK(fine.checked == 495);
  const ConvexityReport coarse = convexity_sample_check(kMoment, 4);
  CHECK(coarse.ok);
  CHECK(coarse.checked == 1);
  CHECK_THROWS_AS(convexity_sample_check(kMoment, 3), Error);
  const CurveSpec quartic = CurveSpec::polynomial(
      {std::vector<Rational>{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 0, 1}});
  const ConvexityReport bad = convexity_sample_check(quartic, 8);
  CHECK_FALSE(bad.ok);
  CHECK(bad.note.find("Frenet") != std::string::npos);
  // Back-tracking curve: the last component is not monotone in the frame.
  const CurveSpec wiggle = CurveSpec::polynomial(
      {std::vector<Rational>{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1, -3}});
  const ConvexityReport wiggly = convexity_sample_check(wiggle, 10);
  CHECK_FALSE(wiggly.ok);
  REQUIRE(wiggly.first_failure_det);
  CHECK(*wiggly.first_failure_det <= 0);
}

TEST_CASE("Schubert counts") {
  CHECK(schubert_count(1, 3) == 2);
  CHECK(schubert_count(0, 5) == 1);
  CHECK(schubert_count(1, 4) == 5);
  CHECK(schubert_count(1, 5) == 14);
  CHECK(schubert_count(2, 5) == 42);
  CHECK(schubert_count(2, 6) == 462);
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k < n; ++k) CHECK(schubert_count(k, n) == schubert_count(n - 1 - k, n));
  // Lines in P^n: Catalan numbers.
  for (int n = 2; n <= 10; ++n) {
    Integer catalan;
    mpz_bin_uiui(catalan.get_mpz_t(), 2 * (n - 1), n - 1);
    catalan /= n;
    CHECK(schubert_count(1, n) == catalan);
  }
  CHECK_THROWS_AS(schubert_count(3, 3), Error);
  CHECK_THROWS_AS(schubert_count(-1, 3), Error);
}
