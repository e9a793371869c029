#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfa/laurent.hpp"
#include "lfa/sturm.hpp"
#include "lfa/taupoly.hpp"

namespace lfa {

/// Real algebraic number: the unique root of the square-free polynomial
/// `poly` in `where`. Rational numbers use a point interval.
class RealPoint {
 public:
  RealPoint() = default;
  RealPoint(Rational r);  // NOLINT(google-explicit-constructor)
  /// `iv` must isolate a root of p (as returned by sturm_isolate).
  RealPoint(const QPoly& p, const IsolatingInterval& iv);

  bool is_rational() const { return iv_.is_point(); }
  /// Exact value; only for rational points.
  const Rational& value() const;
  const QPoly& poly() const { return poly_; }
  const IsolatingInterval& interval() const { return iv_; }
  double approx() const;

  /// Shrinks the isolating interval to width <= w.
  void refine_to(const Rational& w);
  /// Sign of (this - r).
  int compare(const Rational& r);

  /// "2/3" or "root of <poly> in [lo, hi]".
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError.
  static RealPoint parse(const std::string& text);

  friend bool operator==(const RealPoint& a, const RealPoint& b);

 private:
  QPoly poly_;
  IsolatingInterval iv_;
};

/// Strict order between distinct roots (refines as needed).
bool less_than(RealPoint a, RealPoint b);

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
std::pair<Rational, Rational> enclose(const QPoly& p, const Rational& lo, const Rational& hi);

/// Value of a function at a real point, exact or as an enclosure of width <= tol.
struct Valued {
  RealPoint at;
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

struct SupResult {
  enum class Kind { ExactRational, CertifiedEnclosure };
  Kind kind = Kind::ExactRational;
  Rational lo;  // == hi for ExactRational
  Rational hi;
  std::vector<RealPoint> attained_at;

  bool exact() const { return kind == Kind::ExactRational; }
  /// Exact value; throws std::logic_error on an enclosure.
  const Rational& value() const;
  double approx() const;
};

/// sup |f| over [lo, hi]. Throws PoleInDomain.
SupResult sup_abs(const CosFn& f, const Rational& lo, const Rational& hi, const Rational& tol);
/// max over several functions of sup |f_k|.
SupResult sup_abs(const std::vector<CosFn>& fs, const Rational& lo, const Rational& hi, const Rational& tol);

/// Piecewise polynomial in tau. Piece k lives on [breakpoints[k-1], breakpoints[k]),
/// with the first and last pieces unbounded.
struct PiecewisePoly {
  std::vector<RealPoint> breakpoints;
  std::vector<QPoly> pieces;

  /// Index of the piece containing t (closed on the left).
  std::size_t piece_index(const Rational& t) const;
  Rational eval(const Rational& t) const;

  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a.breakpoints == b.breakpoints && a.pieces == b.pieces;
  }
};

/// Pointwise maximum over the real line, with equal neighbours merged.
PiecewisePoly upper_envelope(const std::vector<QPoly>& candidates);

enum class Substitution { C, CSquared };

/// sup over m in [m_lo, m_hi] of |f| as a function of tau, where m = c or
/// m = c^2 and f is affine in m. Throws NotAffine.
PiecewisePoly parametric_envelope(const TauPoly& f, const Rational& m_lo, const Rational& m_hi, Substitution s);

struct MinResult {
  RealPoint argmin;
  Rational lo;  // == hi when exact
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Minimum of q over [lo, hi] (either end may be open-ended). Ties go to the
/// leftmost point. Throws Unbounded.
MinResult piecewise_min(const PiecewisePoly& q, const std::optional<Rational>& lo = std::nullopt,
                        const std::optional<Rational>& hi = std::nullopt, const Rational& tol = Rational(1, 1000000000));

}  // namespace lfa
