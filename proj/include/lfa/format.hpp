#pragma once

#include <string>
#include <string_view>

#include "lfa/poly.hpp"
#include "lfa/rational.hpp"
#include "lfa/ratfn.hpp"

namespace lfa {

/// Ascending-degree rendering, e.g. "1-4t+4t^2" (compact) or "1 - 4t + 4t^2"
/// (spaced). Non-integer coefficients of non-constant terms are parenthesised:
/// "(2/3)t".
std::string format_poly(const Poly<Rational>& p, char var, bool spaced = false);

/// Inverse of format_poly (either style). Throws ParseError.
Poly<Rational> parse_poly(std::string_view text, char var);

/// "p" for polynomials, "(p)/(q)" otherwise.
std::string format_ratfn(const RatFn<Rational>& f, char var, bool spaced = false);
RatFn<Rational> parse_ratfn(std::string_view text, char var);

/// Six significant digits, as used in human-readable output.
std::string format_decimal(double v);

}  // namespace lfa
