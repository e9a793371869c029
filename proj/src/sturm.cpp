#include "lfa/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfa {

QPoly square_free_part(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("square_free_part of zero polynomial");
  if (p.degree() <= 0) return QPoly(Rational(1));
  return monic(exact_div(p, gcd(p, p.derivative())));
}

std::vector<std::pair<QPoly, int>> square_free_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  const QPoly f = monic(p);
  const QPoly df = f.derivative();
  QPoly a = gcd(f, df);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(df, a);
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

QPoly primitive_integer_part(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1;
  for (const auto& a : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.raw().get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& a : p.coeffs()) {
    const mpz_class n = a.num() * (l / a.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return p.scaled(Rational(l, g));
}

int sign_at(const QPoly& p, const Rational& x) { return p.eval(x).sign(); }

SturmChain::SturmChain(const QPoly& square_free) {
  if (square_free.is_zero()) throw std::domain_error("SturmChain of zero polynomial");
  auto normalize = [](const QPoly& q) { return q.scaled(Rational(1) / abs(q.leading())); };
  chain_.push_back(normalize(square_free));
  if (square_free.degree() == 0) return;
  chain_.push_back(normalize(square_free.derivative()));
  while (chain_.back().degree() > 0) {
    QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(normalize(-r));
  }
}

int SturmChain::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational root_bound(const QPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coeff(k)) / lead);
  return m + Rational(1);
}

namespace {

class Isolator {
 public:
  explicit Isolator(const QPoly& p)
      : sqf_(square_free_part(p)),
        chain_(sqf_),
        factors_(square_free_decomposition(p)),
        lead_(abs(primitive_integer_part(sqf_).leading()).num()) {}

  std::vector<IsolatingInterval> run(const Rational& lo, const Rational& hi) {
    if (sqf_.degree() <= 0) return {};
    if (sign_at(sqf_, lo) == 0) emit_point(lo);
    split(lo, hi);
    return std::move(out_);
  }

 private:
  // Roots in (a, b].
  void split(const Rational& a, const Rational& b) {
    const int n = chain_.count(a, b);
    if (n == 0) return;
    if (n > 1) {
      const Rational m = (a + b) / Rational(2);
      split(a, m);
      split(m, b);
      return;
    }
    if (sign_at(sqf_, b) == 0) {
      emit_point(b);
      return;
    }
    isolate_single(a, b);
  }

  // Exactly one root in (a, b); b is not a root.
  void isolate_single(Rational a, Rational b) {
    while (sign_at(sqf_, a) == 0) {
      const Rational m = (a + b) / Rational(2);
      if (sign_at(sqf_, m) == 0) return emit_point(m);
      if (chain_.count(m, b) == 1)
        a = m;
      else
        b = m;
    }
    // Any rational root r of the primitive integer polynomial has lead * r in Z;
    // shrink until at most one such candidate remains and test it exactly.
    const int sb = sign_at(sqf_, b);
    while ((b - a) * Rational(lead_, 1) >= Rational(1)) {
      const Rational m = (a + b) / Rational(2);
      const int sm = sign_at(sqf_, m);
      if (sm == 0) return emit_point(m);
      if (sm == sb)
        b = m;
      else
        a = m;
    }
    const Rational scaled_lo = a * Rational(lead_, 1);
    const mpz_class k = floor(scaled_lo) + 1;
    const Rational candidate(k, lead_);
    if (candidate < b && sign_at(sqf_, candidate) == 0) return emit_point(candidate);
    out_.push_back({a, b, multiplicity_in(a, b)});
  }

  void emit_point(const Rational& r) { out_.push_back({r, r, multiplicity_in(r, r)}); }

  int multiplicity_in(const Rational& a, const Rational& b) const {
    for (const auto& [f, mult] : factors_) {
      if (a == b) {
        if (sign_at(f, a) == 0) return mult;
      } else if (sign_at(f, a) != sign_at(f, b)) {
        return mult;
      }
    }
    return 1;
  }

  QPoly sqf_;
  SturmChain chain_;
  std::vector<std::pair<QPoly, int>> factors_;
  mpz_class lead_;
  std::vector<IsolatingInterval> out_;
};

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");
  if (!(lo < hi)) throw std::domain_error("sturm_isolate: empty interval");
  auto roots = Isolator(p).run(lo, hi);
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return roots;
}

std::vector<IsolatingInterval> real_roots(const QPoly& p) {
  if (p.degree() <= 0) return {};
  const Rational b = root_bound(p);
  return sturm_isolate(p, -b, b);
}

void refine(const QPoly& p, IsolatingInterval& iv, const Rational& width) {
  if (iv.is_point()) return;
  const QPoly sqf = square_free_part(p);
  int slo = sign_at(sqf, iv.lo);
  while (iv.hi - iv.lo > width) {
    const Rational m = iv.midpoint();
    const int sm = sign_at(sqf, m);
    if (sm == 0) {
      iv.lo = iv.hi = m;
      return;
    }
    if (sm == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
}

}  // namespace lfa
