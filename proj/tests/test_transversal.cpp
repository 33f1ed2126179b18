#include <doctest.h>

#include "support.hpp"

using namespace tpline;
using namespace tpline::testing;

namespace {

MatQ from_columns(const std::array<Vec4, 4>& cols) {
  MatQ m(4, 4);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = cols[c][r];
  return m;
}

Plucker conjugate(const Plucker& p) {
  Plucker out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = p[k].conjugate();
  return out;
}

std::vector<LineRep> as_vector(const std::array<LineRep, 2>& lines) {
  return {lines[0], lines[1]};
}

// Raw (value, derivative) blocks of t -> (1, t, t^2, t^3), any real t.
ConfigBlocks raw_moment_tangents(const std::array<Rational, 4>& ts) {
  std::array<MatQ, 4> blocks;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& t = ts[k];
    blocks[k] = MatQ{{1, 0}, {t, 1}, {Rational(t * t), Rational(2 * t)},
                     {Rational(t * t * t), Rational(3 * t * t)}};
  }
  return ConfigBlocks(blocks);
}

void check_solution(const ConfigBlocks& blocks) {
  const TransversalSolution sol = solve_transversals(blocks);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(sol.incidence[i][j].is_zero());
      // Independent recomputation through the Leibniz expansion.
      CHECK(leibniz_det(hcat(to_field(blocks.block(i)), sol.lines[j].span)).is_zero());
    }
  for (const LineRep& line : sol.lines) CHECK(plucker_quadric(line.plucker).is_zero());
  CHECK_FALSE(plucker_proportional(sol.lines[0].plucker, sol.lines[1].plucker));
  CHECK(same_line_pair(oracle_plucker_solve(blocks), as_vector(sol.lines)));
}

}  // namespace

TEST_CASE("bilinear sign matches a direct expansion of the incidence determinant") {
  std::mt19937_64 rng(71);
  const std::array<std::pair<Rational, Rational>, 4> points{
      {{0, 0}, {1, 2}, {make_rational(-3, 2), 5}, {7, make_rational(-1, 3)}}};
  for (int trial = 0; trial < 10; ++trial) {
    const MatQ x = trial == 0 ? x1() : random_matrix(rng, 4, 4);
    const auto [f, h] = bilinear_forms(x);
    for (const auto& [xv, yv] : points) {
      const MatK u = chart_span(QuadNum(xv), QuadNum(yv));
      const QuadNum lhs12 = leibniz_det(hcat(to_field(x.col_block(0, 2)), u));
      const QuadNum lhs34 = leibniz_det(hcat(to_field(x.col_block(2, 2)), u));
      CHECK(lhs12 == f.evaluate(QuadNum(xv), QuadNum(yv)));
      CHECK(lhs34 == h.evaluate(QuadNum(xv), QuadNum(yv)));
    }
  }
}

TEST_CASE("forms and quadratic for the all-ones matrix") {
  const auto [f, h] = bilinear_forms(x1());
  CHECK(f == BilinearForm{2, 1, 3, 2});
  CHECK(h == BilinearForm{4, 6, 10, 20});
  const Quadratic q = eliminate_to_quadratic(f, h);
  CHECK(q == Quadratic{8, 40, 40, 320});
  CHECK(discriminant_from_minors(x1()) == 320);
}

TEST_CASE("elimination edge cases") {
  const BilinearForm f{2, 1, 3, 2};
  const BilinearForm twice{4, 2, 6, 4};
  try {
    eliminate_to_quadratic(f, twice);
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  CHECK_THROWS_AS(eliminate_to_quadratic(f, BilinearForm{0, 0, 0, 0}), Error);
  // xy = 0 and x + y = 0 meet only at the origin, doubly.
  const Quadratic toy = eliminate_to_quadratic(BilinearForm{1, 0, 0, 0}, BilinearForm{0, 1, 1, 0});
  CHECK(toy == Quadratic{1, 0, 0, 0});
}

TEST_CASE("discriminant from minors agrees with elimination") {
  std::mt19937_64 rng(73);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MatQ x = random_matrix(rng, 4, 4);
    const auto [f, h] = bilinear_forms(x);
    try {
      CHECK(eliminate_to_quadratic(f, h).discriminant == discriminant_from_minors(x));
      ++compared;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Degenerate);
    }
  }
  CHECK(compared > 190);
}

TEST_CASE("discriminant is positive on totally positive matrices") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial)
    CHECK(discriminant_from_minors(lw_compose(random_params(rng))) > 0);
}

TEST_CASE("chart roots for the all-ones matrix") {
  const CanonicalSolution sol = solve_canonical(x1());
  REQUIRE(sol.roots.size() == 2);
  CHECK(sol.warnings.empty());
  const QuadNum plus(make_rational(-5, 2), make_rational(1, 16), 320);
  const QuadNum minus(make_rational(-5, 2), make_rational(-1, 16), 320);
  CHECK(sol.roots[0].x == plus);
  CHECK(sol.roots[1].x == minus);
  for (const ChartRoot& root : sol.roots) {
    CHECK_FALSE(root.at_infinity);
    CHECK(root.y == -(QuadNum(6) * root.x + QuadNum(20)) / (QuadNum(4) * root.x + QuadNum(10)));
    CHECK(sol.f.evaluate(root.x, root.y).is_zero());
    CHECK(sol.h.evaluate(root.x, root.y).is_zero());
  }
  CHECK(sol.roots[0].y.approx() == doctest::Approx(-2.6180339887).epsilon(1e-9));
}

TEST_CASE("non-positive discriminants are reported") {
  // Forms xy = 0 and x + y = 0: a double root.
  const MatQ doubled = from_columns({Vec4{1, 0, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{1, 0, -1, 0},
                                     Vec4{0, 1, 0, 1}});
  try {
    solve_canonical(doubled);
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  // Forms xy + 1 = 0 and x - y = 0: x^2 + 1 = 0.
  const MatQ complex_pair = from_columns({Vec4{1, 0, 0, -1}, Vec4{0, 1, 1, 0}, Vec4{1, 0, 1, 0},
                                          Vec4{0, 1, 0, 1}});
  const auto [f, h] = bilinear_forms(complex_pair);
  CHECK(eliminate_to_quadratic(f, h) == Quadratic{1, 0, 1, -4});
  try {
    solve_canonical(complex_pair);
    FAIL("expected no-real-solution error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRealSolution);
  }
}

TEST_CASE("Plucker coordinates") {
  const MatQ e12{{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  const MatQ e34{{0, 0}, {0, 0}, {1, 0}, {0, 1}};
  const MatQ e13{{1, 0}, {0, 0}, {0, 1}, {0, 0}};
  const Plucker p12 = plucker_of_span(e12);
  CHECK(p12 == Plucker{QuadNum(1), QuadNum(0), QuadNum(0), QuadNum(0), QuadNum(0), QuadNum(0)});
  CHECK(plucker_meet(p12, plucker_of_span(e34)) == QuadNum(1));
  CHECK(plucker_meet(p12, plucker_of_span(e13)).is_zero());
  CHECK_THROWS_AS(plucker_of_span(MatQ{{1, 2}, {1, 2}, {0, 0}, {0, 0}}), Error);

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const MatQ a = random_matrix(rng, 4, 2), b = random_matrix(rng, 4, 2);
    if (rank(a) < 2 || rank(b) < 2) continue;
    const Plucker pa = plucker_of_span(a), pb = plucker_of_span(b);
    CHECK(plucker_quadric(pa).is_zero());
    CHECK(plucker_meet(pa, pb) == QuadNum(leibniz_det(hcat(a, b))));
    CHECK(plucker_proportional(plucker_of_span(span_of_plucker(pa)), pa));
    // A change of basis inside the plane rescales by its determinant.
    const MatQ mix{{2, 1}, {3, 5}};
    CHECK(plucker_proportional(plucker_of_span(a * mix), pa));
  }
}

TEST_CASE("transversals of the all-ones configuration") {
  const TransversalSolution sol = solve_transversals(x1_blocks());
  CHECK(sol.warnings.empty());
  CHECK(sol.quadratic.discriminant == 320);
  check_solution(x1_blocks());
  // Galois conjugation swaps the two lines.
  CHECK(plucker_proportional(conjugate(sol.lines[0].plucker), sol.lines[1].plucker));
}

TEST_CASE("transversals are equivariant") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const TpInstance inst = random_tp_instance(static_cast<std::uint64_t>(100 + trial), 9);
    const MatQ h = random_positive_det(rng);
    const TransversalSolution base = solve_transversals(inst.blocks);
    const TransversalSolution moved = solve_transversals(inst.blocks.transformed(h));
    const MatK hk = to_field(h);
    const std::vector<LineRep> mapped{
        LineRep{hk * base.lines[0].span, plucker_of_span(hk * base.lines[0].span)},
        LineRep{hk * base.lines[1].span, plucker_of_span(hk * base.lines[1].span)}};
    CHECK(same_line_pair(mapped, as_vector(moved.lines)));
    CHECK(moved.quadratic.discriminant == base.quadratic.discriminant);
  }
}

TEST_CASE("solver agrees with the Plucker oracle on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TpInstance inst = random_tp_instance(seed, 9);
    check_solution(inst.blocks);
    const TransversalSolution sol = solve_transversals(inst.blocks);
    CHECK(plucker_proportional(conjugate(sol.lines[0].plucker), sol.lines[1].plucker));
  }
}

TEST_CASE("oracle rejects a repeated line") {
  std::array<MatQ, 4> b = x1_blocks().blocks();
  b[1] = b[0];
  try {
    oracle_plucker_solve(ConfigBlocks(b));
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("tangent lines of the twisted cubic") {
  const std::array<std::array<Rational, 4>, 2> times{
      {{0, make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}, {0, 1, 2, 3}}};
  for (const auto& ts : times) {
    const ConfigBlocks blocks = raw_moment_tangents(ts);
    check_solution(blocks);
    CHECK(solve_transversals(blocks).quadratic.discriminant > 0);
  }
}
