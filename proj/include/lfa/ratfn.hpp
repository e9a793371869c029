#pragma once

#include <stdexcept>
#include <utility>

#include "lfa/poly.hpp"

namespace lfa {

/// Reduced quotient of polynomials over a field F.
/// Invariants: den != 0, gcd(num, den) = 1, den monic.
template <class F>
class RatFn {
 public:
  RatFn() : den_(F(1)) {}
  RatFn(long v) : num_(F(v)), den_(F(1)) {}                 // NOLINT(google-explicit-constructor)
  RatFn(F v) : num_(std::move(v)), den_(F(1)) {}            // NOLINT(google-explicit-constructor)
  RatFn(Poly<F> p) : num_(std::move(p)), den_(F(1)) {}      // NOLINT(google-explicit-constructor)
  RatFn(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  F eval(const F& x) const {
    const F d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFn: evaluation at a pole");
    return num_.eval(x) / d;
  }

  RatFn inverse() const {
    if (num_.is_zero()) throw std::domain_error("RatFn: inverse of zero");
    return RatFn(den_, num_);
  }

  RatFn derivative() const {
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RatFn operator-() const { return RatFn(-num_, den_, Reduced{}); }
  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFn(a.num_ * b.num_, Poly<F>(F(1)), Reduced{});
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Reduced {};
  RatFn(Poly<F> num, Poly<F> den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>(F(1));
      return;
    }
    if (den_.degree() > 0) {
      const Poly<F> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      const F inv = F(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly<F> num_;
  Poly<F> den_;
};

}  // namespace lfa
