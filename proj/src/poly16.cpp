#include "tpline/poly16.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <vector>

#include "tpline/error.hpp"

namespace tpline {

Poly16::Poly16(long constant) : Poly16(Integer(constant)) {}

Poly16::Poly16(const Integer& constant) {
  if (sgn(constant) != 0) terms_.emplace(Exponents{}, constant);
}

Poly16 Poly16::variable(char letter) {
  if (letter < 'a' || letter > 'p')
    fail(ErrorKind::Input, std::string("unknown variable '") + letter + "'");
  Exponents e{};
  e[static_cast<std::size_t>(letter - 'a')] = 1;
  return monomial(e, 1);
}

Poly16 Poly16::monomial(const Exponents& exps, const Integer& coeff) {
  Poly16 p;
  p.add_term(exps, coeff);
  return p;
}

void Poly16::add_term(const Exponents& exps, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

unsigned Poly16::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_)
    best = std::max(best, static_cast<unsigned>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

Rational Poly16::evaluate(std::span<const Rational, kPolyVars> values) const {
  // powers[v][k] = values[v]^k, grown on demand.
  std::array<std::vector<Rational>, kPolyVars> powers;
  for (std::size_t v = 0; v < kPolyVars; ++v) powers[v].push_back(Rational(1));
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < kPolyVars; ++v) {
      if (e[v] == 0) continue;
      auto& pw = powers[v];
      while (pw.size() <= e[v]) pw.push_back(pw.back() * values[v]);
      term *= pw[e[v]];
    }
    total += term;
  }
  return total;
}

Poly16 Poly16::operator-() const {
  Poly16 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly16& Poly16::operator+=(const Poly16& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly16& Poly16::operator-=(const Poly16& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly16& Poly16::operator*=(const Poly16& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly16 operator*(const Poly16& lhs, const Poly16& rhs) {
  Poly16 out;
  for (const auto& [el, cl] : lhs.terms_)
    for (const auto& [er, cr] : rhs.terms_) {
      Exponents e;
      for (std::size_t v = 0; v < kPolyVars; ++v) {
        const unsigned sum = unsigned(el[v]) + unsigned(er[v]);
        if (sum > 255) fail(ErrorKind::Arithmetic, "exponent overflow");
        e[v] = static_cast<std::uint8_t>(sum);
      }
      out.add_term(e, Integer(cl * cr));
    }
  return out;
}

std::string to_string(const Poly16& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Integer mag = abs(c);
    const bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool need_sep = false;
    if (mag != 1 || constant) {
      out += mag.get_str();
      need_sep = true;
    }
    for (std::size_t v = 0; v < kPolyVars; ++v) {
      if (e[v] == 0) continue;
      if (need_sep) out += "*";
      out += static_cast<char>('a' + v);
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
      need_sep = true;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly16 parse() {
    Poly16 out;
    skip_space();
    if (at_end()) bad("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        bad("expected '+' or '-'");
      }
      first = false;
      out += parse_term(sign);
      skip_space();
    }
    return out;
  }

 private:
  Poly16 parse_term(int sign) {
    Integer coeff = sign;
    Exponents e{};
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= read_integer();
      } else if (ch >= 'a' && ch <= 'p') {
        ++pos_;
        unsigned power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          const Integer p = read_integer();
          if (p > 255) bad("exponent too large");
          power = static_cast<unsigned>(p.get_ui());
        }
        const std::size_t v = static_cast<std::size_t>(ch - 'a');
        if (e[v] + power > 255) bad("exponent too large");
        e[v] = static_cast<std::uint8_t>(e[v] + power);
      } else {
        bad(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_space();
      if (!skip_multiplication()) break;
    }
    if (!any) bad("empty term");
    return Poly16::monomial(e, coeff);
  }

  bool skip_multiplication() {
    if (!at_end() && peek() == '*') {
      ++pos_;
      return true;
    }
    // U+00B7 MIDDLE DOT in UTF-8.
    if (text_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  Integer read_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) bad("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void bad(const std::string& what) const {
    fail(ErrorKind::Input, "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly16 parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string content_hash(const Poly16& poly) {
  const std::string text = to_string(poly);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::Internal, "sha256 failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

PolyComparison compare(const Poly16& lhs, const Poly16& rhs) {
  PolyComparison out;
  out.difference = lhs - rhs;
  out.equal = out.difference.is_zero();
  return out;
}

}  // namespace tpline
