#pragma once

#include <complex>
#include <string>

#include "lfa/rational.hpp"

namespace lfa {

/// Element of Q(i). Used for the coefficients of frequency symbols, where the
/// quarter-turn shifts z -> i^q z introduce imaginary units.
class Gauss {
 public:
  Gauss() = default;
  Gauss(long v) : re_(v) {}                      // NOLINT(google-explicit-constructor)
  Gauss(Rational re) : re_(std::move(re)) {}     // NOLINT(google-explicit-constructor)
  Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// i^k for any integer k.
  static Gauss i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return Gauss(1);
      case 1: return Gauss(0, 1);
      case 2: return Gauss(-1);
      default: return Gauss(0, -1);
    }
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gauss conj() const { return Gauss(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  Gauss operator-() const { return Gauss(-re_, -im_); }
  Gauss& operator+=(const Gauss& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gauss& operator-=(const Gauss& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gauss& operator*=(const Gauss& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Gauss& operator/=(const Gauss& o) {
    const Rational n = o.norm2();
    if (n.is_zero()) throw std::domain_error("Gauss: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag = im_ == Rational(1) ? "i" : (im_ == Rational(-1) ? "-i" : im_.to_string() + "i");
    if (re_.is_zero()) return imag;
    return "(" + re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag + ")";
  }

 private:
  Rational re_;
  Rational im_;
};

/// Exact square root in Q(i); ok is false when none exists.
inline Gauss sqrt_exact(const Gauss& g, bool& ok) {
  ok = false;
  if (g.is_zero()) {
    ok = true;
    return Gauss(0);
  }
  if (g.is_real()) {
    if (g.re().sign() > 0) {
      Rational s = sqrt_exact(g.re(), ok);
      return Gauss(s);
    }
    Rational s = sqrt_exact(-g.re(), ok);
    return Gauss(Rational(0), s);
  }
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |g|) / 2, y = b / (2x)
  bool ok_mod = false;
  const Rational modulus = sqrt_exact(g.norm2(), ok_mod);
  if (!ok_mod) return Gauss(0);
  bool ok_x = false;
  const Rational x = sqrt_exact((g.re() + modulus) / Rational(2), ok_x);
  if (!ok_x || x.is_zero()) return Gauss(0);
  ok = true;
  return Gauss(x, g.im() / (Rational(2) * x));
}

}  // namespace lfa
