#include <doctest.h>

#include "support.hpp"

using namespace tpline;
using namespace tpline::testing;

namespace {

ConfigBlocks with_block(const ConfigBlocks& base, std::size_t k, MatQ block) {
  std::array<MatQ, 4> b = base.blocks();
  b[k] = std::move(block);
  return ConfigBlocks(b);
}

MatQ swap_columns(const MatQ& block) {
  MatQ out(block.rows(), 2);
  for (std::size_t r = 0; r < block.rows(); ++r) {
    out(r, 0) = block(r, 1);
    out(r, 1) = block(r, 0);
  }
  return out;
}

// All 70 maximal minors, enumerated independently of check_tp_config.
bool all_maximal_minors_positive(const MatQ& a) {
  for (const IndexSet& cols : IndexSet::subsets(8, 4))
    if (sgn(leibniz_det(a.submatrix(IndexSet::range(1, 4), cols))) <= 0) return false;
  return true;
}

}  // namespace

TEST_CASE("configuration blocks validate shape and rank") {
  CHECK_THROWS_AS(ConfigBlocks({MatQ(4, 2), MatQ(4, 2), MatQ(4, 2), MatQ(4, 2)}), Error);
  CHECK_THROWS_AS(ConfigBlocks({MatQ(3, 2), MatQ(4, 2), MatQ(4, 2), MatQ(4, 2)}), Error);
  CHECK(x1_blocks().concatenated() == hcat(x1(), sign_matrix_y()));
}

TEST_CASE("check_tp_config examples") {
  const TpReport ok = check_tp_config(x1_blocks());
  CHECK(ok.ok);
  CHECK(ok.minors_checked == 70);
  CHECK(all_maximal_minors_positive(x1_blocks().concatenated()));

  const ConfigBlocks swapped = with_block(x1_blocks(), 0, swap_columns(x1_blocks().block(0)));
  const TpReport bad = check_tp_config(swapped);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  CHECK(bad.witness->cols == IndexSet{1, 2, 3, 4});
  CHECK(bad.witness->value < 0);

  const ConfigBlocks dup = with_block(x1_blocks(), 1, x1_blocks().block(0));
  const TpReport zero = check_tp_config(dup);
  CHECK_FALSE(zero.ok);
  REQUIRE(zero.witness);
  CHECK(zero.witness->value == 0);
  CHECK(zero.witness->cols == IndexSet{1, 2, 3, 4});
}

TEST_CASE("check_tp_square examples") {
  const MatQ pascal{{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 6, 10}, {1, 4, 10, 20}};
  const TpReport p = check_tp_square(pascal);
  CHECK(p.ok);
  CHECK(p.minors_checked == 69);
  const TpReport id = check_tp_square(MatQ::identity(4));
  CHECK_FALSE(id.ok);
  REQUIRE(id.witness);
  CHECK(id.witness->rows == IndexSet{1});
  CHECK(id.witness->cols == IndexSet{2});
  CHECK(check_tp_square(x1()).ok);
}

TEST_CASE("config check agrees with the square check") {
  std::mt19937_64 rng(53);
  int tp_count = 0, non_tp_count = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const MatQ x = lw_compose(random_params(rng));
    CHECK(check_tp_square(x).ok);
    CHECK(check_tp_config(ConfigBlocks::from_matrix(hcat(x, sign_matrix_y()))).ok);
    ++tp_count;
  }
  while (non_tp_count < 50) {
    MatQ x = lw_compose(random_params(rng));
    // Perturb one entry so that some minor turns non-positive.
    std::uniform_int_distribution<int> pick(0, 3);
    x(pick(rng), pick(rng)) -= random_positive(rng, 40) * 10;
    const bool square_ok = check_tp_square(x).ok;
    bool config_ok = false;
    try {
      config_ok = check_tp_config(ConfigBlocks::from_matrix(hcat(x, sign_matrix_y()))).ok;
    } catch (const Error&) {
      config_ok = false;  // a rank-deficient block cannot be TP either
    }
    CHECK(square_ok == config_ok);
    if (!square_ok) ++non_tp_count;
  }
  CHECK(tp_count == 50);
}

TEST_CASE("canonicalize examples") {
  const CanonicalForm c = canonicalize(x1_blocks());
  CHECK(c.g == MatQ::identity(4));
  CHECK(c.x == x1());
  CHECK(c.y == sign_matrix_y());

  const ConfigBlocks degenerate = with_block(x1_blocks(), 3, x1_blocks().block(2));
  try {
    canonicalize(degenerate);
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }

  const ConfigBlocks swapped = with_block(x1_blocks(), 0, swap_columns(x1_blocks().block(0)));
  try {
    canonicalize(swapped);
    FAIL("expected hypothesis violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolation);
    CHECK(std::string(e.what()).find("minor") != std::string::npos);
  }

  // Negative det(g): flip the sign of one column of W4.
  MatQ w4 = x1_blocks().block(3);
  for (std::size_t r = 0; r < 4; ++r) w4(r, 0) = -w4(r, 0);
  try {
    canonicalize(with_block(x1_blocks(), 3, w4));
    FAIL("expected hypothesis violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolation);
  }
}

TEST_CASE("canonicalize is equivariant under positive-determinant changes of basis") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const TpInstance inst = random_tp_instance(static_cast<std::uint64_t>(trial), 12);
    const MatQ h = random_positive_det(rng);
    const CanonicalForm base = canonicalize(inst.blocks);
    const CanonicalForm moved = canonicalize(inst.blocks.transformed(h));
    CHECK(moved.x == base.x);
    CHECK(moved.g == base.g * inverse(h));
    CHECK(det(moved.g) > 0);
  }
}

TEST_CASE("lw_compose examples") {
  CHECK(lw_compose(LWParams::all_ones()) == x1());
  std::array<Rational, 16> v;
  v.fill(Rational(1));
  v['m' - 'a'] = 2;
  const MatQ scaled = lw_compose(LWParams(v));
  // m scales the first column of L * diag; with L's first column (1, 3, 3, 1)
  // and U's first row that doubles the first row of X entrywise here, and
  // leaves det = m n o p.
  for (std::size_t c = 0; c < 4; ++c) CHECK(scaled(0, c) == 2 * x1()(0, c));
  CHECK(det(scaled) == 2);
  v['m' - 'a'] = 0;
  try {
    LWParams bad(v);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
    CHECK(std::string(e.what()).find("parameter m") != std::string::npos);
  }
}

TEST_CASE("lw_compose is totally positive with det m n o p") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const LWParams p = random_params(rng);
    const MatQ x = lw_compose(p);
    CHECK(check_tp_square(x).ok);
    CHECK(det(x) == p['m'] * p['n'] * p['o'] * p['p']);
  }
}

TEST_CASE("lw_factor round trips") {
  CHECK(lw_factor(x1()) == LWParams::all_ones());
  try {
    lw_factor(MatQ::identity(4));
    FAIL("expected not-totally-positive error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTotallyPositive);
  }
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const LWParams p = random_params(rng);
    const MatQ x = lw_compose(p);
    CHECK(lw_factor(x) == p);
    CHECK(lw_compose(lw_factor(x)) == x);
  }
  const MatQ pascal{{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 6, 10}, {1, 4, 10, 20}};
  CHECK(lw_compose(lw_factor(pascal)) == pascal);
}

TEST_CASE("random_tp_instance") {
  const TpInstance a = random_tp_instance(0, 9);
  const TpInstance b = random_tp_instance(0, 9);
  const TpInstance c = random_tp_instance(1, 9);
  CHECK(a.params == b.params);
  CHECK(a.blocks == b.blocks);
  CHECK_FALSE(a.params == c.params);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TpInstance inst = random_tp_instance(seed, 50);
    CHECK(check_tp_config(inst.blocks).ok);
    for (const Rational& v : inst.params.values()) {
      CHECK(v > 0);
      CHECK(v.get_num() <= 50);
      CHECK(v.get_den() <= 50);
    }
  }
  CHECK_THROWS_AS(random_tp_instance(0, 0), Error);
}
