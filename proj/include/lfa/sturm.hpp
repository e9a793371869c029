#pragma once

#include <utility>
#include <vector>

#include "lfa/poly.hpp"
#include "lfa/rational.hpp"

namespace lfa {

using QPoly = Poly<Rational>;

/// Closed interval [lo, hi] holding exactly one distinct real root of the
/// target polynomial, counted `multiplicity` times. lo == hi marks an exact
/// rational root; otherwise neither endpoint is a root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_point() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  Rational width() const { return hi - lo; }
};

/// p / gcd(p, p'), made monic.
QPoly square_free_part(const QPoly& p);

/// Yun's algorithm: p = lc * prod f_i^i with f_i square-free and pairwise
/// coprime. Returns (f_i, i) for the non-constant factors.
std::vector<std::pair<QPoly, int>> square_free_decomposition(const QPoly& p);

/// Scales p by a positive rational so that its coefficients are coprime
/// integers.
QPoly primitive_integer_part(const QPoly& p);

int sign_at(const QPoly& p, const Rational& x);

/// Sturm sequence of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& square_free);

  int variations(const Rational& x) const;
  /// Distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  const QPoly& base() const { return chain_.front(); }

 private:
  std::vector<QPoly> chain_;
};

/// Cauchy bound: every real root lies in (-B, B).
Rational root_bound(const QPoly& p);

/// Pairwise-disjoint isolating intervals for the real roots of p in [lo, hi],
/// sorted ascending. Rational roots come back as point intervals.
std::vector<IsolatingInterval> sturm_isolate(const QPoly& p, const Rational& lo, const Rational& hi);

/// All real roots of p.
std::vector<IsolatingInterval> real_roots(const QPoly& p);

/// Bisects iv (a root interval of p) until its width is at most `width`.
void refine(const QPoly& p, IsolatingInterval& iv, const Rational& width);

}  // namespace lfa
