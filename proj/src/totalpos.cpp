#include "tpline/totalpos.hpp"

#include <random>

#include "random_draw.hpp"

namespace tpline {

namespace {

constexpr char kLetters[] = "abcdefghijklmnop";

}  // namespace

ConfigBlocks::ConfigBlocks(std::array<MatQ, 4> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t k = 0; k < 4; ++k) {
    const MatQ& w = blocks_[k];
    if (w.rows() != 4 || w.cols() != 2)
      fail(ErrorKind::Input, "block W" + std::to_string(k + 1) + " is " + std::to_string(w.rows()) +
                                 "x" + std::to_string(w.cols()) + ", expected 4x2");
    if (rank(w) != 2)
      fail(ErrorKind::Input, "block W" + std::to_string(k + 1) + " has rank < 2");
  }
}

ConfigBlocks ConfigBlocks::from_matrix(const MatQ& a) {
  if (a.rows() != 4 || a.cols() != 8) fail(ErrorKind::Input, "configuration matrix must be 4x8");
  return ConfigBlocks({a.col_block(0, 2), a.col_block(2, 2), a.col_block(4, 2), a.col_block(6, 2)});
}

MatQ ConfigBlocks::concatenated() const {
  return hcat(hcat(blocks_[0], blocks_[1]), hcat(blocks_[2], blocks_[3]));
}

ConfigBlocks ConfigBlocks::transformed(const MatQ& h) const {
  return ConfigBlocks({h * blocks_[0], h * blocks_[1], h * blocks_[2], h * blocks_[3]});
}

LWParams::LWParams(std::array<Rational, 16> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < 16; ++k)
    if (sgn(values_[k]) <= 0)
      fail(ErrorKind::Domain, std::string("parameter ") + kLetters[k] + " = " +
                                  to_string(values_[k]) + " is not positive");
}

LWParams LWParams::all_ones() {
  std::array<Rational, 16> v;
  v.fill(Rational(1));
  return LWParams(v);
}

const Rational& LWParams::operator[](char letter) const {
  if (letter < 'a' || letter > 'p') fail(ErrorKind::Input, "unknown parameter");
  return values_[static_cast<std::size_t>(letter - 'a')];
}

TpReport check_tp_config(const ConfigBlocks& blocks) {
  const MatQ a = blocks.concatenated();
  const IndexSet all_rows = IndexSet::range(1, 4);
  TpReport report;
  for (const IndexSet& cols : IndexSet::subsets(8, 4)) {
    ++report.minors_checked;
    Rational value = minor_det(a, all_rows, cols);
    if (sgn(value) <= 0) {
      report.ok = false;
      report.witness = MinorWitness{all_rows, cols, std::move(value)};
      break;
    }
  }
  return report;
}

TpReport check_tp_square(const MatQ& x) {
  require_square(x, "check_tp_square");
  const std::size_t n = x.rows();
  TpReport report;
  for (std::size_t order = 1; order <= n; ++order) {
    const auto sets = IndexSet::subsets(n, order);
    for (const IndexSet& rows : sets)
      for (const IndexSet& cols : sets) {
        ++report.minors_checked;
        Rational value = minor_det(x, rows, cols);
        if (sgn(value) <= 0) {
          report.ok = false;
          report.witness = MinorWitness{rows, cols, std::move(value)};
          return report;
        }
      }
  }
  return report;
}

const MatQ& sign_matrix_y() {
  static const MatQ y = {
      {0, 0, 0, -1},
      {0, 0, 1, 0},
      {0, -1, 0, 0},
      {1, 0, 0, 0},
  };
  return y;
}

CanonicalForm canonical_transform(const ConfigBlocks& blocks) {
  const MatQ right = hcat(blocks.block(2), blocks.block(3));
  if (sgn(det(right)) == 0)
    fail(ErrorKind::Degenerate, "degenerate configuration: det[W3 W4] = 0");
  CanonicalForm out;
  out.g = sign_matrix_y() * inverse(right);
  out.x = out.g * hcat(blocks.block(0), blocks.block(1));
  out.y = sign_matrix_y();
  return out;
}

CanonicalForm canonicalize(const ConfigBlocks& blocks) {
  CanonicalForm out = canonical_transform(blocks);
  const Rational dg = det(out.g);
  if (sgn(dg) <= 0)
    fail(ErrorKind::HypothesisViolation,
         "hypothesis violation: det(g) = " + to_string(dg) +
             " is not positive (minor of columns {5,6,7,8} is " +
             to_string(Rational(1 / dg)) + ")");
  const TpReport tp = check_tp_square(out.x);
  if (!tp.ok)
    fail(ErrorKind::HypothesisViolation,
         "hypothesis violation: canonical X is not totally positive; " + describe(*tp.witness));
  return out;
}

MatQ lw_compose(const LWParams& p) {
  const Rational &a = p['a'], &b = p['b'], &c = p['c'], &d = p['d'], &e = p['e'], &f = p['f'],
                 &g = p['g'], &h = p['h'], &i = p['i'], &j = p['j'], &k = p['k'], &l = p['l'],
                 &m = p['m'], &n = p['n'], &o = p['o'], &q = p['p'];
  const MatQ lower = {
      {1, 0, 0, 0},
      {Rational(g + j + l), 1, 0, 0},
      {Rational(h * j + h * l + k * l), Rational(h + k), 1, 0},
      {Rational(i * k * l), Rational(i * k), i, 1},
  };
  const MatQ diag = {
      {m, 0, 0, 0},
      {0, n, 0, 0},
      {0, 0, o, 0},
      {0, 0, 0, q},
  };
  const MatQ upper = {
      {1, Rational(f + d + a), Rational(a * b + a * e + d * e), Rational(a * b * c)},
      {0, 1, Rational(b + e), Rational(b * c)},
      {0, 0, 1, c},
      {0, 0, 0, 1},
  };
  return lower * diag * upper;
}

namespace {

const Rational& positive(const Rational& value, char name) {
  if (sgn(value) <= 0)
    fail(ErrorKind::NotTotallyPositive, std::string("not totally positive: recovered parameter ") +
                                            name + " = " + to_string(value));
  return value;
}

Rational safe_div(const Rational& num, const Rational& den, char name) {
  if (sgn(den) == 0)
    fail(ErrorKind::NotTotallyPositive,
         std::string("not totally positive: zero denominator recovering parameter ") + name);
  return num / den;
}

}  // namespace

LWParams lw_factor(const MatQ& x) {
  if (x.rows() != 4 || x.cols() != 4) fail(ErrorKind::Dimension, "lw_factor expects a 4x4 matrix");
  // Doolittle LDU without pivoting.
  MatQ work = x;
  MatQ lower = MatQ::identity(4);
  std::array<Rational, 4> pivots;
  for (std::size_t k = 0; k < 4; ++k) {
    pivots[k] = work(k, k);
    if (sgn(pivots[k]) <= 0)
      fail(ErrorKind::NotTotallyPositive, "not totally positive: pivot " + std::to_string(k + 1) +
                                              " = " + to_string(pivots[k]));
    for (std::size_t r = k + 1; r < 4; ++r) {
      lower(r, k) = work(r, k) / pivots[k];
      for (std::size_t c = k; c < 4; ++c) work(r, c) -= lower(r, k) * work(k, c);
    }
  }
  MatQ upper = MatQ::identity(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r + 1; c < 4; ++c) upper(r, c) = work(r, c) / pivots[r];

  auto u = [&](int r, int c) -> const Rational& { return upper(r - 1, c - 1); };
  auto l = [&](int r, int c) -> const Rational& { return lower(r - 1, c - 1); };

  const Rational c = positive(u(3, 4), 'c');
  const Rational b = positive(safe_div(u(2, 4), c, 'b'), 'b');
  const Rational e = positive(Rational(u(2, 3) - b), 'e');
  const Rational a = positive(safe_div(u(1, 4), Rational(b * c), 'a'), 'a');
  const Rational d = positive(safe_div(Rational(u(1, 3) - a * u(2, 3)), e, 'd'), 'd');
  const Rational f = positive(Rational(u(1, 2) - d - a), 'f');

  const Rational i = positive(l(4, 3), 'i');
  const Rational k = positive(safe_div(l(4, 2), i, 'k'), 'k');
  const Rational ll = positive(safe_div(l(4, 1), l(4, 2), 'l'), 'l');
  const Rational h = positive(Rational(l(3, 2) - k), 'h');
  const Rational j = positive(safe_div(Rational(l(3, 1) - l(3, 2) * ll), h, 'j'), 'j');
  const Rational g = positive(Rational(l(2, 1) - j - ll), 'g');

  LWParams params({a, b, c, d, e, f, g, h, i, j, k, ll, pivots[0], pivots[1], pivots[2], pivots[3]});
  if (lw_compose(params) != x)
    fail(ErrorKind::NotTotallyPositive,
         "not totally positive: matrix lies outside the 16-parameter chart");
  return params;
}

TpInstance random_tp_instance(std::uint64_t seed, std::uint32_t bound) {
  if (bound < 1) fail(ErrorKind::Domain, "bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::array<Rational, 16> values;
  for (auto& v : values) v = detail::positive_rational(rng, bound);
  LWParams params(values);
  ConfigBlocks blocks = ConfigBlocks::from_matrix(hcat(lw_compose(params), sign_matrix_y()));
  return TpInstance{std::move(params), std::move(blocks)};
}

std::string describe(const MinorWitness& witness) {
  return "minor rows " + to_string(witness.rows) + " cols " + to_string(witness.cols) + " = " +
         to_string(witness.value);
}

}  // namespace tpline
