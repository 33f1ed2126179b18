#include "tpline/quadnum.hpp"

#include <cmath>
#include <ostream>

#include "tpline/error.hpp"

namespace tpline {

QuadNum::QuadNum(const Rational& a, const Rational& b, const Rational& d)
    : a_(a), b_(b), d_(d) {
  if (sgn(d_) < 0) fail(ErrorKind::Context, "negative radicand " + to_string(d_));
  fold_square_radicand();
}

void QuadNum::fold_square_radicand() {
  if (sgn(b_) == 0) return;
  Rational root;
  if (rational_sqrt(d_, root)) {
    a_ += b_ * root;
    b_ = 0;
  }
}

const Rational& QuadNum::shared_radicand(const QuadNum& rhs) const {
  if (sgn(rhs.b_) == 0) return d_;
  if (sgn(b_) == 0 || d_ == rhs.d_) return rhs.d_;
  fail(ErrorKind::Context, "radicand mismatch: sqrt(" + to_string(d_) + ") vs sqrt(" +
                               to_string(rhs.d_) + ")");
}

QuadNum QuadNum::conjugate() const {
  QuadNum out = *this;
  out.b_ = -b_;
  return out;
}

Rational QuadNum::norm() const { return a_ * a_ - d_ * b_ * b_; }

int QuadNum::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0 || sgn(d_) == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with d b^2.
  const int cmp_sq = ::cmp(Rational(a_ * a_), Rational(d_ * b_ * b_));
  if (cmp_sq == 0) return 0;
  return cmp_sq > 0 ? sa : sb;
}

double QuadNum::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

QuadNum QuadNum::rebase(const Rational& new_d) const {
  if (sgn(b_) == 0) {
    QuadNum out = *this;
    out.d_ = new_d;
    return out;
  }
  if (d_ == new_d) return *this;
  if (sgn(new_d) == 0)
    fail(ErrorKind::Context, "cannot rebase an irrational value onto sqrt(0)");
  Rational scale;
  if (!rational_sqrt(Rational(d_ / new_d), scale))
    fail(ErrorKind::Context, "sqrt(" + to_string(d_) + ") is not a rational multiple of sqrt(" +
                                 to_string(new_d) + ")");
  return QuadNum(a_, Rational(b_ * scale), new_d);
}

QuadNum QuadNum::operator-() const {
  QuadNum out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  const Rational d = shared_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  d_ = d;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
  const Rational d = shared_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  d_ = d;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  const Rational d = shared_radicand(rhs);
  Rational a = a_ * rhs.a_ + d * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
  const Rational d = shared_radicand(rhs);
  if (rhs.is_zero()) fail(ErrorKind::Arithmetic, "division by zero in Q(sqrt(d))");
  const Rational n = rhs.norm();
  // Radicands are never perfect squares once b != 0, so n != 0.
  Rational a = (a_ * rhs.a_ - d * b_ * rhs.b_) / n;
  Rational b = (b_ * rhs.a_ - a_ * rhs.b_) / n;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

bool operator==(const QuadNum& lhs, const QuadNum& rhs) {
  if (lhs.a_ != rhs.a_ || lhs.b_ != rhs.b_) return false;
  return sgn(lhs.b_) == 0 || lhs.d_ == rhs.d_;
}

std::string to_string(const QuadNum& value) {
  if (value.is_rational()) return to_string(value.a());
  std::string out;
  if (sgn(value.a()) != 0) out = to_string(value.a()) + (sgn(value.b()) > 0 ? " + " : " - ");
  else if (sgn(value.b()) < 0) out = "-";
  out += to_string(Rational(abs(value.b()))) + "*sqrt(" + to_string(value.d()) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& value) {
  return os << to_string(value);
}

}  // namespace tpline
