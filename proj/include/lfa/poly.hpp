#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lfa {

/// Dense univariate polynomial, coefficient index = degree.
///
/// F must be a commutative ring with `is_zero()`, construction from `long`
/// and the usual arithmetic operators. Division-based operations
/// (divmod, gcd, monic) additionally require F to be a field.
template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(F constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  Poly(long constant) : Poly(F(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly x() { return monomial(F(1), 1); }
  static Poly monomial(F coeff, int k) {
    if (coeff.is_zero()) return {};
    std::vector<F> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = std::move(coeff);
    return Poly(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int k) const {
    if (k < 0 || k > degree()) return F{};
    return c_[static_cast<std::size_t>(k)];
  }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
  }

  F eval(const F& x) const {
    F acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<long>(k)));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<F> n;
    n.reserve(c_.size());
    for (const auto& v : c_) n.push_back(-v);
    return Poly(std::move(n));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v * s);
    return Poly(std::move(r));
  }

  /// Multiply by x^k (k >= 0).
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<F> r(static_cast<std::size_t>(k));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return static_cast<int>(k);
    return 0;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
Poly<F> pow(const Poly<F>& p, int k) {
  Poly<F> r(F(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

/// p(q(x)).
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q) {
  Poly<F> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + Poly<F>(p.coeff(k));
  return acc;
}

/// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  std::vector<F> rem = a.coeffs();
  const int db = b.degree();
  const F lead = b.leading();
  if (a.degree() < db) return {Poly<F>{}, a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const F& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    F factor = top / lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeff(j);
    quot[static_cast<std::size_t>(k - db)] = std::move(factor);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return p.scaled(F(1) / p.leading());
}

/// Monic greatest common divisor over a field; gcd(0, 0) is rejected.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

/// Exact quotient; throws if b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
  return q;
}

}  // namespace lfa
