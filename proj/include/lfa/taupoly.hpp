#pragma once

#include <string>
#include <string_view>

#include "lfa/format.hpp"
#include "lfa/sturm.hpp"

namespace lfa {

/// Bivariate polynomial: outer variable c = cos(theta), coefficients are
/// polynomials in the damping parameter tau.
using TauPoly = Poly<QPoly>;

/// Lift a polynomial in c with constant (tau-free) coefficients.
TauPoly tau_lift(const QPoly& in_c);
/// Substitute tau; the result is a polynomial in c.
QPoly tau_freeze(const TauPoly& f, const Rational& tau);
/// Degree in tau (max over c-coefficients), -1 for zero.
int tau_degree(const TauPoly& f);

/// "(1-2t+t^2) + (-2t+3t^2)c^2"; c-coefficients in compact t-form.
std::string format_taupoly(const TauPoly& f);
/// Inverse of format_taupoly. Throws ParseError.
TauPoly parse_taupoly(std::string_view text);

}  // namespace lfa
