#include "tpline/rational.hpp"

#include <cctype>

#include "tpline/error.hpp"

namespace tpline {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Context: return "context";
    case ErrorKind::Arithmetic: return "arithmetic";
    case ErrorKind::Input: return "input";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::NotTotallyPositive: return "not-totally-positive";
    case ErrorKind::NoRealSolution: return "no-real-solution";
    case ErrorKind::SearchFailure: return "search-failure";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) fail(ErrorKind::Arithmetic, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    fail(ErrorKind::Input, "malformed rational \"" + std::string(text) + "\"");
  Integer d = parse_integer(den);
  if (sgn(d) == 0)
    fail(ErrorKind::Input, "zero denominator in \"" + std::string(text) + "\"");
  return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

bool rational_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  root = make_rational(sqrt(num), sqrt(den));
  return true;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace tpline
