#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "lfa/gaussian.hpp"
#include "lfa/poly.hpp"
#include "lfa/ratfn.hpp"
#include "lfa/sturm.hpp"

namespace lfa {

using GPoly = Poly<Gauss>;
/// Rational function in z = e^{i theta} over Q(i).
using ZFn = RatFn<Gauss>;
/// Rational function in c = cos(theta) over Q.
using CosFn = RatFn<Rational>;

/// Laurent polynomial sum_o a_o z^o in z = e^{i theta}, times h^{h_exponent}.
class LaurentSymbol {
 public:
  LaurentSymbol() = default;
  LaurentSymbol(std::map<int, Gauss> coeffs, int h_exponent);
  static LaurentSymbol real(const std::map<int, Rational>& coeffs, int h_exponent);
  static LaurentSymbol constant(Gauss value, int h_exponent = 0) { return LaurentSymbol({{0, std::move(value)}}, h_exponent); }
  /// z^shift * p(z).
  static LaurentSymbol from_poly(const GPoly& p, int shift, int h_exponent);

  const std::map<int, Gauss>& coeffs() const { return coeffs_; }
  Gauss coeff(int offset) const;
  int h_exponent() const { return h_exponent_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_offset() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_offset() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  /// z -> i^q z, i.e. theta -> theta + q*pi/2.
  LaurentSymbol shifted(int quarter_turns) const;
  /// z -> z^k (frequency multiplied by k).
  LaurentSymbol substituted(int k) const;
  /// z -> 1/z.
  LaurentSymbol reflected() const;
  /// Coefficient-wise conjugate composed with z -> 1/z: the pointwise complex
  /// conjugate on the unit circle.
  LaurentSymbol adjoint() const;
  LaurentSymbol scaled(const Gauss& s) const;
  LaurentSymbol with_h_exponent(int e) const { return LaurentSymbol(coeffs_, e); }

  /// a_{-k} = conj(a_k): real-valued on the unit circle.
  bool is_hermitian() const;
  /// a_{-k} = a_k and all coefficients real: an even real function of theta.
  bool is_cosine_symbol() const;

  std::complex<double> eval(std::complex<double> z) const;
  /// Value at e^{i theta}, ignoring the h factor.
  std::complex<double> eval_theta(double theta) const;
  ZFn to_zfn() const;

  /// Ascending offsets, e.g. "-z^-1 + 2 - z".
  std::string to_string() const;

  friend LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b);
  friend LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b);
  friend LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b);
  friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) {
    return a.h_exponent_ == b.h_exponent_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<int, Gauss> coeffs_;
  int h_exponent_ = 0;
};

/// T_k with T_k(cos theta) = cos(k theta).
QPoly chebyshev(int k);

/// p(c) with p(cos theta) equal to the symbol on the unit circle. Requires a
/// cosine symbol; throws NotHermitian otherwise.
std::pair<QPoly, int> laurent_to_cospoly(const LaurentSymbol& s);

/// Splits a rational function of z into z^{-v} * poly parts and rewrites it in
/// c = cos(theta). The function must be real and even in theta on the unit
/// circle; throws NotHermitian otherwise.
CosFn cosine_form(const ZFn& f);

/// Laurent string of a rational function of z, e.g. "(1 + z)/(2 - z^-1)".
std::string format_zfn(const ZFn& f);

}  // namespace lfa
