#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tpline/matrix.hpp"
#include "tpline/totalpos.hpp"

namespace tpline {

/// xy * x * y + x_coeff * x + y_coeff * y + one = 0
struct BilinearForm {
  Rational xy;
  Rational x;
  Rational y;
  Rational one;

  QuadNum evaluate(const QuadNum& xv, const QuadNum& yv) const;
  bool is_zero() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// a x^2 + b x + c = 0 with discriminant b^2 - 4ac.
struct Quadratic {
  Rational a;
  Rational b;
  Rational c;
  Rational discriminant;

  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Plucker coordinates (p12, p13, p14, p23, p24, p34).
using Plucker = std::array<QuadNum, 6>;

struct LineRep {
  MatK span;  // 4x2
  Plucker plucker;
};

/// Global sign relating det[X_cols(J) | U(x, y)] to the unsigned minor
/// coefficients; fixed by symbolic expansion of the 4x4 determinant.
inline constexpr int kBilinearSign = +1;

/// f from the minors of X in columns {1,2}, h from columns {3,4}.
std::pair<BilinearForm, BilinearForm> bilinear_forms(const MatQ& x);

/// Eliminates y by solving h for y and substituting into f.
/// A = f.xy h.x - f.x h.xy, B = f.xy h.one + f.y h.x - f.x h.y - f.one h.xy,
/// C = f.y h.one - f.one h.y.
Quadratic eliminate_to_quadratic(const BilinearForm& f, const BilinearForm& h);

Rational discriminant_from_minors(const MatQ& x);

/// Columns (1, -x, 0, 0) and (0, 0, -1, y).
MatK chart_span(const QuadNum& x, const QuadNum& y);

struct ChartRoot {
  QuadNum x;
  QuadNum y;
  LineRep line;          // canonical coordinates
  bool at_infinity = false;
};

struct CanonicalSolution {
  BilinearForm f;
  BilinearForm h;
  Quadratic quadratic;
  std::vector<ChartRoot> roots;
  std::vector<std::string> warnings;
};

/// Both common solutions of f = h = 0 over Q(sqrt(D)).
CanonicalSolution solve_canonical(const MatQ& x);

struct TransversalSolution {
  CanonicalForm canonical;
  BilinearForm f;
  BilinearForm h;
  Quadratic quadratic;
  std::array<LineRep, 2> lines;  // original coordinates
  std::array<std::array<QuadNum, 2>, 4> incidence;  // det[W_i | L_j]
  std::vector<std::string> warnings;
};

TransversalSolution solve_transversals(const ConfigBlocks& blocks);

Plucker plucker_of_span(const MatK& span);
Plucker plucker_of_span(const MatQ& span);

/// p12 q34 - p13 q24 + p14 q23 + p23 q14 - p24 q13 + p34 q12.
QuadNum plucker_meet(const Plucker& p, const Plucker& q);

/// p12 p34 - p13 p24 + p14 p23.
QuadNum plucker_quadric(const Plucker& p);

/// Both vectors nonzero and every 2x2 cross product p_i q_j - p_j q_i zero.
/// Operands over different radicands are rebased when the radicands differ
/// by a rational square factor.
bool plucker_proportional(const Plucker& p, const Plucker& q);

/// A 4x2 span whose Plucker vector is proportional to p.
MatK span_of_plucker(const Plucker& p);

/// Independent solver: intersects the linear incidence conditions with the
/// Plucker quadric.
std::vector<LineRep> oracle_plucker_solve(const ConfigBlocks& blocks);

/// True when the two unordered pairs agree up to Plucker scale.
bool same_line_pair(const std::vector<LineRep>& lhs, const std::vector<LineRep>& rhs);

}  // namespace tpline
