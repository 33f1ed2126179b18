#include "tpline/identity.hpp"

#include <cctype>
#include <random>
#include <string_view>

#include "random_draw.hpp"

namespace tpline {

namespace {

Poly16 var(char letter) { return Poly16::variable(letter); }

// Parses the compact notation of the published formulas: monomials are
// runs of single-letter variables, e.g. "2cdehijmo + bknp".
Poly16 from_words(std::string_view text) {
  Poly16 out;
  int sign = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++pos;
    } else {
      long coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        coeff = coeff * 10 + (text[pos++] - '0');
      Poly16 term(sign * (coeff == 0 ? 1 : coeff));
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
        term *= var(text[pos++]);
      out += term;
      sign = 1;
    }
  }
  return out;
}

constexpr std::string_view kPrintedF =
    "acehijmo + acehilmo + 2cdehijmo + cdehilmo + abhjmp + abhlmp + abklmp + "
    "aehjmp + aehlmp + aeklmp + cehino + dehjmp + dehlmp + deklmp + bhnp + 2bknp + ehnp + eknp";

constexpr std::string_view kPrintedG =
    "acehijmo + acehilmo + cdehilmo + abhjmp + abhlmp + abklmp + aehjmp + aehlmp + "
    "aeklmp + cehino + dehjmp + dehlmp + deklmp + bhnp + ehnp + eknp";

constexpr std::string_view kPrintedH = "bknp - cdehijmo";


}  // namespace

PolyMatrix symbolic_x() {
  const Poly16 a = var('a'), b = var('b'), c = var('c'), d = var('d'), e = var('e'), f = var('f'),
               g = var('g'), h = var('h'), i = var('i'), j = var('j'), k = var('k'), l = var('l'),
               m = var('m'), n = var('n'), o = var('o'), p = var('p');
  const PolyMatrix lower = {
      {1, 0, 0, 0},
      {g + j + l, 1, 0, 0},
      {h * j + h * l + k * l, h + k, 1, 0},
      {i * k * l, i * k, i, 1},
  };
  const PolyMatrix diag = {
      {m, 0, 0, 0},
      {0, n, 0, 0},
      {0, 0, o, 0},
      {0, 0, 0, p},
  };
  const PolyMatrix upper = {
      {1, f + d + a, a * b + a * e + d * e, a * b * c},
      {0, 1, b + e, b * c},
      {0, 0, 1, c},
      {0, 0, 0, 1},
  };
  return lower * diag * upper;
}

Poly16 symbolic_discriminant() {
  const PolyMatrix x = symbolic_x();
  auto delta = [&](const IndexSet& rows, const IndexSet& cols) {
    return det_cofactor(x.submatrix(rows, cols));
  };
  const IndexSet c12{1, 2}, c34{3, 4};
  const Poly16 d13_12 = delta({1, 3}, c12), d14_12 = delta({1, 4}, c12),
               d23_12 = delta({2, 3}, c12), d24_12 = delta({2, 4}, c12);
  const Poly16 d13_34 = delta({1, 3}, c34), d14_34 = delta({1, 4}, c34),
               d23_34 = delta({2, 3}, c34), d24_34 = delta({2, 4}, c34);
  const Poly16 bracket = d13_12 * d24_34 - d24_12 * d13_34 - d14_12 * d23_34 + d23_12 * d14_34;
  const Poly16 left = d13_12 * d14_34 - d14_12 * d13_34;
  const Poly16 right = d23_12 * d24_34 - d24_12 * d23_34;
  return bracket * bracket - Poly16(4) * left * right;
}

PrintedFGH printed_fgh() {
  return PrintedFGH{from_words(kPrintedF), from_words(kPrintedG), from_words(kPrintedH)};
}

Poly16 printed_rhs() {
  const PrintedFGH fgh = printed_fgh();
  const Poly16 mn = var('m') * var('n');
  return mn * mn * (fgh.f * fgh.g + fgh.h * fgh.h);
}

IdentityCertificate verify_identity(std::size_t spot_count, std::uint64_t seed) {
  IdentityCertificate cert;
  cert.lhs = symbolic_discriminant();
  cert.rhs = printed_rhs();
  PolyComparison cmp = compare(cert.lhs, cert.rhs);
  cert.equal = cmp.equal;
  cert.difference = std::move(cmp.difference);

  auto spot = [&](const std::array<Rational, 16>& params) {
    cert.spots.push_back(
        SpotEvaluation{params, cert.lhs.evaluate(params), cert.rhs.evaluate(params)});
  };
  std::array<Rational, 16> ones;
  ones.fill(Rational(1));
  spot(ones);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < spot_count; ++s) {
    std::array<Rational, 16> params;
    for (auto& v : params) v = detail::positive_rational(rng, 1000);
    spot(params);
  }
  return cert;
}

}  // namespace tpline
