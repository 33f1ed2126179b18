#pragma once

#include <iosfwd>
#include <string>

#include "tpline/rational.hpp"

namespace tpline {

/// An element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// The radicand is carried by every value. It is not reduced to square-free
/// form, so two values are comparable only inside one radicand context.
/// Values with b == 0 are plain rationals and combine with any context.
/// A perfect-square radicand is folded into the rational part on
/// construction, which keeps division well defined.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadNum(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QuadNum(const Rational& a, const Rational& b, const Rational& d);

  static QuadNum sqrt_of(const Rational& d) { return QuadNum(0, 1, d); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return sgn(b_) == 0; }
  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// a - b*sqrt(d); the image under sqrt(d) -> -sqrt(d).
  QuadNum conjugate() const;
  /// a^2 - d*b^2.
  Rational norm() const;
  /// Exact sign of the real number a + b*sqrt(d).
  int sign() const;
  double approx() const;

  /// Re-expresses this value over radicand new_d. Requires d/new_d to be
  /// the square of a rational (or b == 0).
  QuadNum rebase(const Rational& new_d) const;

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  QuadNum& operator/=(const QuadNum& rhs);

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadNum& lhs, const QuadNum& rhs);

 private:
  const Rational& shared_radicand(const QuadNum& rhs) const;
  void fold_square_radicand();

  Rational a_;
  Rational b_;
  Rational d_;
};

std::string to_string(const QuadNum& value);
std::ostream& operator<<(std::ostream& os, const QuadNum& value);

}  // namespace tpline
