#include "lfa/format.hpp"

#include <cctype>
#include <cstdio>

#include "lfa/errors.hpp"

namespace lfa {

std::string format_poly(const Poly<Rational>& p, char var, bool spaced) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& a = p.coeffs()[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    const bool neg = a.sign() < 0;
    const Rational mag = abs(a);
    if (first) {
      if (neg) out += "-";
    } else {
      out += spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+");
    }
    first = false;
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, char var) : s_(s), var_(var) {}

  Poly<Rational> parse() {
    std::vector<Rational> coeffs;
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff(1);
      bool have_coeff = false;
      if (peek() == '(') {
        ++pos_;
        const auto close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unbalanced parenthesis");
        coeff = Rational::parse(s_.substr(pos_, close - pos_));
        pos_ = close + 1;
        have_coeff = true;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        coeff = Rational::parse(s_.substr(start, pos_ - start));
        have_coeff = true;
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      }
      int degree = 0;
      if (peek() == var_) {
        ++pos_;
        degree = 1;
        if (peek() == '^') {
          ++pos_;
          const std::size_t start = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (start == pos_) fail("missing exponent");
          degree = std::stoi(std::string(s_.substr(start, pos_ - start)));
        }
      } else if (!have_coeff) {
        fail("expected coefficient or variable");
      }
      if (coeffs.size() <= static_cast<std::size_t>(degree)) coeffs.resize(static_cast<std::size_t>(degree) + 1);
      coeffs[static_cast<std::size_t>(degree)] += sign < 0 ? -coeff : coeff;
    }
    return Poly<Rational>(std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly<Rational> parse_poly(std::string_view text, char var) { return PolyParser(text, var).parse(); }

std::string format_ratfn(const RatFn<Rational>& f, char var, bool spaced) {
  if (f.is_polynomial()) return format_poly(f.num(), var, spaced);
  return "(" + format_poly(f.num(), var, spaced) + ")/(" + format_poly(f.den(), var, spaced) + ")";
}

RatFn<Rational> parse_ratfn(std::string_view text, char var) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (!text.empty() && text.front() == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close != std::string_view::npos && close + 1 < text.size() && text[close + 1] == '/') {
      std::string_view rest = text.substr(close + 2);
      if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw ParseError("malformed rational function '" + std::string(text) + "'");
      return RatFn<Rational>(parse_poly(text.substr(1, close - 1), var),
                             parse_poly(rest.substr(1, rest.size() - 2), var));
    }
  }
  return RatFn<Rational>(parse_poly(text, var));
}

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace lfa
