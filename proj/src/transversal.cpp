#include "tpline/transversal.hpp"

#include <optional>
#include <tuple>

namespace tpline {

namespace {

const IndexSet kCols12{1, 2};
const IndexSet kCols34{3, 4};

// Row pairs 13, 14, 23, 24 give the coefficients of xy, x, y, 1.
BilinearForm form_from_columns(const MatQ& x, const IndexSet& cols) {
  return BilinearForm{
      Rational(kBilinearSign * minor_det(x, {1, 3}, cols)),
      Rational(kBilinearSign * minor_det(x, {1, 4}, cols)),
      Rational(kBilinearSign * minor_det(x, {2, 3}, cols)),
      Rational(kBilinearSign * minor_det(x, {2, 4}, cols)),
  };
}

bool proportional(const BilinearForm& f, const BilinearForm& h) {
  const std::array<const Rational*, 4> u{&f.xy, &f.x, &f.y, &f.one};
  const std::array<const Rational*, 4> v{&h.xy, &h.x, &h.y, &h.one};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
  return true;
}

LineRep make_line(MatK span) {
  LineRep line;
  line.plucker = plucker_of_span(span);
  line.span = std::move(span);
  return line;
}

// y from whichever form has a nonvanishing y-denominator at x.
std::optional<QuadNum> recover_y(const BilinearForm& f, const BilinearForm& h, const QuadNum& x) {
  for (const BilinearForm* form : {&h, &f}) {
    const QuadNum den = QuadNum(form->xy) * x + QuadNum(form->y);
    if (!den.is_zero()) return -(QuadNum(form->x) * x + QuadNum(form->one)) / den;
  }
  return std::nullopt;
}

// Limit line of the chart as x -> infinity along a common solution.
LineRep line_at_infinity(const BilinearForm& f, const BilinearForm& h) {
  MatK span(4, 2);
  span(1, 0) = QuadNum(-1);
  // y(x) -> -x_coeff / xy_coeff for whichever form has xy != 0.
  for (const BilinearForm* form : {&h, &f}) {
    if (sgn(form->xy) != 0) {
      span(2, 1) = QuadNum(-1);
      span(3, 1) = QuadNum(Rational(-form->x / form->xy));
      return make_line(std::move(span));
    }
  }
  span(3, 1) = QuadNum(1);
  return make_line(std::move(span));
}

}  // namespace

QuadNum BilinearForm::evaluate(const QuadNum& xv, const QuadNum& yv) const {
  return QuadNum(xy) * xv * yv + QuadNum(x) * xv + QuadNum(y) * yv + QuadNum(one);
}

bool BilinearForm::is_zero() const {
  return sgn(xy) == 0 && sgn(x) == 0 && sgn(y) == 0 && sgn(one) == 0;
}

std::pair<BilinearForm, BilinearForm> bilinear_forms(const MatQ& x) {
  if (x.rows() != 4 || x.cols() != 4) fail(ErrorKind::Dimension, "bilinear_forms expects 4x4 X");
  return {form_from_columns(x, kCols12), form_from_columns(x, kCols34)};
}

Quadratic eliminate_to_quadratic(const BilinearForm& f, const BilinearForm& h) {
  if (f.is_zero() || h.is_zero() || proportional(f, h))
    fail(ErrorKind::Degenerate, "degenerate pencil: the two incidence forms are proportional");
  Quadratic q;
  q.a = f.xy * h.x - f.x * h.xy;
  q.b = f.xy * h.one + f.y * h.x - f.x * h.y - f.one * h.xy;
  q.c = f.y * h.one - f.one * h.y;
  q.discriminant = q.b * q.b - 4 * q.a * q.c;
  return q;
}

Rational discriminant_from_minors(const MatQ& x) {
  auto delta = [&](IndexSet rows, const IndexSet& cols) { return minor_det(x, rows, cols); };
  const Rational d13_12 = delta({1, 3}, kCols12), d14_12 = delta({1, 4}, kCols12),
                 d23_12 = delta({2, 3}, kCols12), d24_12 = delta({2, 4}, kCols12);
  const Rational d13_34 = delta({1, 3}, kCols34), d14_34 = delta({1, 4}, kCols34),
                 d23_34 = delta({2, 3}, kCols34), d24_34 = delta({2, 4}, kCols34);
  const Rational bracket = d13_12 * d24_34 - d24_12 * d13_34 - d14_12 * d23_34 + d23_12 * d14_34;
  const Rational left = d13_12 * d14_34 - d14_12 * d13_34;
  const Rational right = d23_12 * d24_34 - d24_12 * d23_34;
  return bracket * bracket - 4 * left * right;
}

MatK chart_span(const QuadNum& x, const QuadNum& y) {
  MatK span(4, 2);
  span(0, 0) = QuadNum(1);
  span(1, 0) = -x;
  span(2, 1) = QuadNum(-1);
  span(3, 1) = y;
  return span;
}

CanonicalSolution solve_canonical(const MatQ& x) {
  CanonicalSolution out;
  std::tie(out.f, out.h) = bilinear_forms(x);
  out.quadratic = eliminate_to_quadratic(out.f, out.h);
  const Quadratic& q = out.quadratic;

  std::vector<QuadNum> xs;
  bool infinite_root = false;
  if (sgn(q.a) == 0) {
    if (sgn(q.b) == 0)
      fail(ErrorKind::Degenerate, "non-generic configuration: eliminated quadratic vanishes");
    xs.push_back(QuadNum(Rational(-q.c / q.b)));
    infinite_root = true;
    out.warnings.push_back("root-at-infinity");
  } else {
    const int ds = sgn(q.discriminant);
    if (ds < 0)
      fail(ErrorKind::NoRealSolution, "no real solution: discriminant " +
                                          to_string(q.discriminant) + " is negative");
    if (ds == 0)
      fail(ErrorKind::Degenerate, "double root: discriminant is 0, the two lines coincide");
    const Rational two_a = 2 * q.a;
    const Rational centre = -q.b / two_a;
    const Rational half = 1 / two_a;
    xs.push_back(QuadNum(centre, half, q.discriminant));
    xs.push_back(QuadNum(centre, Rational(-half), q.discriminant));
  }

  for (const QuadNum& xv : xs) {
    const auto yv = recover_y(out.f, out.h, xv);
    if (!yv)
      fail(ErrorKind::Degenerate,
           "non-generic configuration: both y-denominators vanish at x = " + to_string(xv));
    if (!out.f.evaluate(xv, *yv).is_zero() || !out.h.evaluate(xv, *yv).is_zero())
      fail(ErrorKind::Internal, "recovered root does not satisfy both incidence forms");
    out.roots.push_back(ChartRoot{xv, *yv, make_line(chart_span(xv, *yv)), false});
  }
  if (infinite_root) {
    ChartRoot root;
    root.line = line_at_infinity(out.f, out.h);
    root.at_infinity = true;
    out.roots.push_back(std::move(root));
  }
  return out;
}

TransversalSolution solve_transversals(const ConfigBlocks& blocks) {
  TransversalSolution sol;
  const TpReport tp = check_tp_config(blocks);
  if (tp.ok) {
    sol.canonical = canonicalize(blocks);
  } else {
    sol.canonical = canonical_transform(blocks);
    sol.warnings.push_back("hypothesis-not-verified");
  }
  CanonicalSolution canon = solve_canonical(sol.canonical.x);
  sol.f = canon.f;
  sol.h = canon.h;
  sol.quadratic = canon.quadratic;
  sol.warnings.insert(sol.warnings.end(), canon.warnings.begin(), canon.warnings.end());
  if (tp.ok && sgn(sol.quadratic.discriminant) <= 0)
    fail(ErrorKind::Internal, "discriminant is not positive on a verified configuration");
  if (canon.roots.size() != 2) fail(ErrorKind::Internal, "expected two chart roots");

  const MatK back = to_field(inverse(sol.canonical.g));
  for (std::size_t j = 0; j < 2; ++j) sol.lines[j] = make_line(back * canon.roots[j].line.span);

  if (plucker_proportional(sol.lines[0].plucker, sol.lines[1].plucker))
    fail(ErrorKind::Degenerate, "the two transversals coincide");

  for (std::size_t i = 0; i < 4; ++i) {
    const MatK w = to_field(blocks.block(i));
    for (std::size_t j = 0; j < 2; ++j) {
      sol.incidence[i][j] = det(hcat(w, sol.lines[j].span));
      if (!sol.incidence[i][j].is_zero())
        fail(ErrorKind::Internal, "incidence certificate failed for W" + std::to_string(i + 1) +
                                      " and line " + std::to_string(j + 1));
    }
  }
  for (const LineRep& line : sol.lines)
    if (!plucker_quadric(line.plucker).is_zero())
      fail(ErrorKind::Internal, "line violates the Plucker quadric");
  return sol;
}

Plucker plucker_of_span(const MatK& span) {
  if (span.rows() != 4 || span.cols() != 2) fail(ErrorKind::Dimension, "span must be 4x2");
  static constexpr std::array<std::pair<int, int>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Plucker p;
  bool nonzero = false;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [r, s] = kPairs[k];
    p[k] = span(r, 0) * span(s, 1) - span(s, 0) * span(r, 1);
    nonzero = nonzero || !p[k].is_zero();
  }
  if (!nonzero) fail(ErrorKind::Degenerate, "degenerate line: span has rank < 2");
  return p;
}

Plucker plucker_of_span(const MatQ& span) { return plucker_of_span(to_field(span)); }

QuadNum plucker_meet(const Plucker& p, const Plucker& q) {
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
}

QuadNum plucker_quadric(const Plucker& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

namespace {

// Common radicand for two Plucker vectors, or the first one's if both are
// rational.
Rational common_radicand(const Plucker& p, const Plucker& q) {
  for (const Plucker* v : {&p, &q})
    for (const QuadNum& x : *v)
      if (!x.is_rational()) return x.d();
  return Rational(0);
}

// Compares p / p_k and q / q_k for the first nonzero coordinate k. Used when
// the two vectors live over radicands that are not rational multiples of
// each other; such fields meet only in Q.
bool normalized_equal(const Plucker& p, const Plucker& q) {
  std::size_t k = 0;
  while (k < 6 && p[k].is_zero()) ++k;
  if (k == 6 || q[k].is_zero()) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!q[i].is_zero()) return false;
  for (std::size_t i = k; i < 6; ++i) {
    const QuadNum u = p[i] / p[k];
    const QuadNum v = q[i] / q[k];
    if (u.is_rational() != v.is_rational()) return false;
    if (u.is_rational()) {
      if (u.a() != v.a()) return false;
      continue;
    }
    try {
      if (!(u == v.rebase(u.d()))) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool plucker_proportional(const Plucker& p, const Plucker& q) {
  Rational d = common_radicand(p, q);
  Plucker pp = p, qq = q;
  try {
    for (auto& x : pp) x = x.rebase(d);
    for (auto& x : qq) x = x.rebase(d);
  } catch (const Error&) {
    return normalized_equal(p, q);
  }
  bool p_nonzero = false, q_nonzero = false;
  for (std::size_t i = 0; i < 6; ++i) {
    p_nonzero = p_nonzero || !pp[i].is_zero();
    q_nonzero = q_nonzero || !qq[i].is_zero();
  }
  if (!p_nonzero || !q_nonzero) return false;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (!(pp[i] * qq[j] - pp[j] * qq[i]).is_zero()) return false;
  return true;
}

MatK span_of_plucker(const Plucker& p) {
  // Skew matrix P with P[r][s] = p_rs; the rows r, s of a nonzero p_rs span
  // the line (their wedge is p_rs * p).
  static constexpr std::array<std::pair<int, int>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Matrix<QuadNum> skew(4, 4);
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [r, s] = kPairs[k];
    skew(r, s) = p[k];
    skew(s, r) = -p[k];
  }
  for (std::size_t k = 0; k < 6; ++k) {
    if (p[k].is_zero()) continue;
    const auto [r, s] = kPairs[k];
    MatK span(4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      span(i, 0) = skew(r, i);
      span(i, 1) = skew(s, i);
    }
    return span;
  }
  fail(ErrorKind::Degenerate, "degenerate line: zero Plucker vector");
}

std::vector<LineRep> oracle_plucker_solve(const ConfigBlocks& blocks) {
  // plucker_meet(p, q) = r(q) . p with r(q) = (q34, -q24, q23, q14, -q13, q12).
  MatQ conditions(4, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    const Plucker q = plucker_of_span(blocks.block(i));
    const std::array<QuadNum, 6> row{q[5], -q[4], q[3], q[2], -q[1], q[0]};
    for (std::size_t k = 0; k < 6; ++k) conditions(i, k) = row[k].a();
  }
  const MatQ basis = nullspace(conditions);
  if (basis.cols() != 2)
    fail(ErrorKind::Degenerate, "degenerate configuration: incidence conditions leave a " +
                                    std::to_string(basis.cols()) + "-dimensional solution space");
  Plucker v1, v2;
  for (std::size_t k = 0; k < 6; ++k) {
    v1[k] = QuadNum(basis(k, 0));
    v2[k] = QuadNum(basis(k, 1));
  }
  // quadric(s v1 + t v2) = alpha s^2 + beta s t + gamma t^2
  const Rational alpha = plucker_quadric(v1).a();
  const Rational beta = plucker_meet(v1, v2).a();
  const Rational gamma = plucker_quadric(v2).a();
  if (sgn(alpha) == 0 && sgn(beta) == 0 && sgn(gamma) == 0)
    fail(ErrorKind::Degenerate, "degenerate configuration: infinitely many transversals");
  const Rational disc = beta * beta - 4 * alpha * gamma;

  auto combine = [&](const QuadNum& s, const QuadNum& t) {
    Plucker p;
    for (std::size_t k = 0; k < 6; ++k) p[k] = s * v1[k] + t * v2[k];
    LineRep line;
    line.span = span_of_plucker(p);
    line.plucker = p;
    return line;
  };

  std::vector<LineRep> lines;
  if (sgn(disc) < 0) return lines;
  if (sgn(alpha) == 0) {
    // t (beta s + gamma t) = 0
    lines.push_back(combine(QuadNum(1), QuadNum(0)));
    if (sgn(beta) != 0) lines.push_back(combine(QuadNum(Rational(-gamma)), QuadNum(beta)));
    return lines;
  }
  const Rational centre = -beta / (2 * alpha);
  const Rational half = 1 / (2 * alpha);
  lines.push_back(combine(QuadNum(centre, half, disc), QuadNum(1)));
  if (sgn(disc) > 0) lines.push_back(combine(QuadNum(centre, Rational(-half), disc), QuadNum(1)));
  return lines;
}

bool same_line_pair(const std::vector<LineRep>& lhs, const std::vector<LineRep>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  if (lhs.size() == 1) return plucker_proportional(lhs[0].plucker, rhs[0].plucker);
  if (lhs.size() != 2) return lhs.empty();
  auto match = [](const LineRep& a, const LineRep& b) {
    return plucker_proportional(a.plucker, b.plucker);
  };
  return (match(lhs[0], rhs[0]) && match(lhs[1], rhs[1])) ||
         (match(lhs[0], rhs[1]) && match(lhs[1], rhs[0]));
}

}  // namespace tpline
