#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "tpline/rational.hpp"

namespace tpline {

inline constexpr std::size_t kPolyVars = 16;

/// Exponent vector over the variables a < b < ... < p.
using Exponents = std::array<std::uint8_t, kPolyVars>;

/// Sparse polynomial with integer coefficients in the sixteen
/// factorization parameters a..p. Zero coefficients are never stored, so
/// structural equality is mathematical equality.
class Poly16 {
 public:
  using TermMap = std::map<Exponents, Integer>;

  Poly16() = default;
  Poly16(long constant);  // NOLINT(google-explicit-constructor)
  explicit Poly16(const Integer& constant);

  /// The variable with the given letter, 'a'..'p'.
  static Poly16 variable(char letter);
  static Poly16 monomial(const Exponents& exps, const Integer& coeff);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned total_degree() const;

  Rational evaluate(std::span<const Rational, kPolyVars> values) const;

  Poly16 operator-() const;
  Poly16& operator+=(const Poly16& rhs);
  Poly16& operator-=(const Poly16& rhs);
  Poly16& operator*=(const Poly16& rhs);

  friend Poly16 operator+(Poly16 lhs, const Poly16& rhs) { return lhs += rhs; }
  friend Poly16 operator-(Poly16 lhs, const Poly16& rhs) { return lhs -= rhs; }
  friend Poly16 operator*(const Poly16& lhs, const Poly16& rhs);

  friend bool operator==(const Poly16&, const Poly16&) = default;

 private:
  void add_term(const Exponents& exps, const Integer& coeff);

  TermMap terms_;
};

/// Canonical text: terms in descending lexicographic order of exponent
/// vectors, e.g. "a^2 + 2*a*b + b^2"; the zero polynomial is "0".
std::string to_string(const Poly16& poly);

/// Parses the canonical text form. Accepts '*' or U+00B7 as the
/// multiplication sign and arbitrary term order.
Poly16 parse_poly(std::string_view text);

/// Hex SHA-256 of the canonical text.
std::string content_hash(const Poly16& poly);

struct PolyComparison {
  bool equal = false;
  Poly16 difference;  // lhs - rhs
};

PolyComparison compare(const Poly16& lhs, const Poly16& rhs);

}  // namespace tpline
