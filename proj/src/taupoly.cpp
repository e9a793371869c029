#include "lfa/taupoly.hpp"

#include <algorithm>
#include <cctype>

#include "lfa/errors.hpp"

namespace lfa {

TauPoly tau_lift(const QPoly& in_c) {
  std::vector<QPoly> c;
  for (const auto& a : in_c.coeffs()) c.emplace_back(a);
  return TauPoly(std::move(c));
}

QPoly tau_freeze(const TauPoly& f, const Rational& tau) {
  std::vector<Rational> c;
  for (const auto& a : f.coeffs()) c.push_back(a.eval(tau));
  return QPoly(std::move(c));
}

int tau_degree(const TauPoly& f) {
  int d = -1;
  for (const auto& a : f.coeffs()) d = std::max(d, a.degree());
  return d;
}

std::string format_taupoly(const TauPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= f.degree(); ++k) {
    const QPoly& a = f.coeffs()[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_poly(a, 't') + ")";
    if (k >= 1) out += "c";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

TauPoly parse_taupoly(std::string_view text) {
  std::vector<QPoly> coeffs;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '+')) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw ParseError(why + " in '" + std::string(text) + "'");
  };
  skip();
  if (pos >= text.size()) fail("empty expression");
  if (text.substr(pos) == "0") return {};
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parenthesis");
    const QPoly a = parse_poly(text.substr(pos + 1, close - pos - 1), 't');
    pos = close + 1;
    int k = 0;
    if (pos < text.size() && text[pos] == 'c') {
      ++pos;
      k = 1;
      if (pos < text.size() && text[pos] == '^') {
        const std::size_t start = ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("missing exponent");
        k = std::stoi(std::string(text.substr(start, pos - start)));
      }
    }
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] += a;
    skip();
  }
  return TauPoly(std::move(coeffs));
}

}  // namespace lfa
