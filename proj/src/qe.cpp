#include "lfa/qe.hpp"

#include <algorithm>
#include <stdexcept>

#include "lfa/errors.hpp"
#include "lfa/format.hpp"

namespace lfa {

namespace {

QPoly linear_root(const Rational& r) { return QPoly{-r, Rational(1)}; }

std::pair<Rational, Rational> mul(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
  const Rational p[4] = {a.first * b.first, a.first * b.second, a.second * b.first, a.second * b.second};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

std::pair<Rational, Rational> abs_range(const std::pair<Rational, Rational>& v) {
  if (v.first.sign() >= 0) return v;
  if (v.second.sign() <= 0) return {-v.second, -v.first};
  return {Rational(0), std::max(-v.first, v.second)};
}

int cmp(const RealPoint& a, const RealPoint& b) {
  if (a == b) return 0;
  return less_than(a, b) ? -1 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

RealPoint::RealPoint(Rational r) : poly_(linear_root(r)), iv_{r, r, 1} {}

RealPoint::RealPoint(const QPoly& p, const IsolatingInterval& iv) : iv_(iv) {
  if (iv.is_point())
    poly_ = linear_root(iv.lo);
  else
    poly_ = square_free_part(p);
}

const Rational& RealPoint::value() const {
  if (!is_rational()) throw std::logic_error("RealPoint::value on an irrational point");
  return iv_.lo;
}

double RealPoint::approx() const {
  if (is_rational()) return iv_.lo.to_double();
  RealPoint fine = *this;
  fine.refine_to(Rational(1, 1LL << 50));
  return fine.iv_.midpoint().to_double();
}

void RealPoint::refine_to(const Rational& w) {
  if (is_rational()) return;
  const int slo = sign_at(poly_, iv_.lo);
  while (iv_.width() > w) {
    const Rational m = iv_.midpoint();
    const int sm = sign_at(poly_, m);
    if (sm == 0) {
      *this = RealPoint(m);
      return;
    }
    if (sm == slo)
      iv_.lo = m;
    else
      iv_.hi = m;
  }
}

int RealPoint::compare(const Rational& r) {
  if (is_rational()) return (iv_.lo <=> r) < 0 ? -1 : (iv_.lo == r ? 0 : 1);
  if (r <= iv_.lo) return 1;
  if (r >= iv_.hi) return -1;
  const int sr = sign_at(poly_, r);
  if (sr == 0) throw std::logic_error("RealPoint: isolating interval contains a second root");
  if (sr == sign_at(poly_, iv_.lo)) {
    iv_.lo = r;
    return 1;
  }
  iv_.hi = r;
  return -1;
}

std::string RealPoint::to_string() const {
  if (is_rational()) return iv_.lo.to_string();
  return "root of " + format_poly(poly_, 't') + " in [" + iv_.lo.to_string() + ", " + iv_.hi.to_string() + "]";
}

RealPoint RealPoint::parse(const std::string& text) {
  const std::string prefix = "root of ";
  if (text.rfind(prefix, 0) != 0) return RealPoint(Rational::parse(text));
  const auto in = text.find(" in [");
  const auto comma = text.find(", ", in == std::string::npos ? 0 : in);
  if (in == std::string::npos || comma == std::string::npos || text.back() != ']')
    throw ParseError("malformed algebraic point '" + text + "'");
  const QPoly p = parse_poly(text.substr(prefix.size(), in - prefix.size()), 't');
  const Rational lo = Rational::parse(text.substr(in + 5, comma - in - 5));
  const Rational hi = Rational::parse(text.substr(comma + 2, text.size() - comma - 3));
  if (!(lo < hi) || sign_at(p, lo) * sign_at(p, hi) >= 0) throw ParseError("interval does not isolate a root: " + text);
  return RealPoint(p, IsolatingInterval{lo, hi, 1});
}

bool operator==(const RealPoint& a, const RealPoint& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.iv_.lo == b.iv_.lo;
  const QPoly g = gcd(a.poly_, b.poly_);
  if (g.degree() < 1) return false;
  const Rational lo = std::max(a.iv_.lo, b.iv_.lo);
  const Rational hi = std::min(a.iv_.hi, b.iv_.hi);
  if (!(lo < hi)) return false;
  return !sturm_isolate(g, lo, hi).empty();
}

bool less_than(RealPoint a, RealPoint b) {
  if (a == b) return false;
  if (b.is_rational()) return a.compare(b.value()) < 0;
  if (a.is_rational()) return b.compare(a.value()) > 0;
  while (true) {
    if (a.interval().hi <= b.interval().lo) return true;
    if (b.interval().hi <= a.interval().lo) return false;
    a.refine_to(a.interval().width() / Rational(2));
    b.refine_to(b.interval().width() / Rational(2));
    if (a.is_rational() || b.is_rational()) return less_than(a, b);
  }
}

std::pair<Rational, Rational> enclose(const QPoly& p, const Rational& lo, const Rational& hi) {
  std::pair<Rational, Rational> acc{Rational(0), Rational(0)};
  const std::pair<Rational, Rational> x{lo, hi};
  for (int k = p.degree(); k >= 0; --k) {
    acc = mul(acc, x);
    acc.first += p.coeff(k);
    acc.second += p.coeff(k);
  }
  return acc;
}

// ---------------------------------------------------------------------------

const Rational& SupResult::value() const {
  if (!exact()) throw std::logic_error("SupResult::value on an enclosure");
  return lo;
}

double SupResult::approx() const { return ((lo + hi) / Rational(2)).to_double(); }

namespace {

Valued abs_value(const CosFn& f, RealPoint at, const Rational& tol) {
  if (at.is_rational()) {
    const Rational v = abs(f.eval(at.value()));
    return {at, v, v};
  }
  const QPoly rn = divmod(f.num(), at.poly()).second;
  const QPoly rd = divmod(f.den(), at.poly()).second;
  if (rn.degree() <= 0 && rd.degree() == 0) {
    const Rational v = abs(rn.coeff(0) / rd.coeff(0));
    return {at, v, v};
  }
  while (true) {
    const auto& iv = at.interval();
    const auto n = enclose(f.num(), iv.lo, iv.hi);
    const auto d = enclose(f.den(), iv.lo, iv.hi);
    if (d.first.sign() > 0 || d.second.sign() < 0) {
      const std::pair<Rational, Rational> inv{Rational(1) / d.second, Rational(1) / d.first};
      const auto a = abs_range(mul(n, inv));
      if (a.second - a.first <= tol) return {at, a.first, a.second};
    }
    at.refine_to(iv.width() / Rational(2));
    if (at.is_rational()) return abs_value(f, at, tol);
  }
}

std::vector<Valued> sup_candidates(const CosFn& f, const Rational& lo, const Rational& hi, const Rational& tol) {
  if (hi < lo) throw std::domain_error("sup_abs: empty interval");
  if (f.den().degree() > 0) {
    const bool pole = lo == hi ? f.den().eval(lo).is_zero() : !sturm_isolate(f.den(), lo, hi).empty();
    if (pole) throw PoleInDomain("denominator " + format_poly(f.den(), 'c') + " vanishes in [" + lo.to_string() + ", " + hi.to_string() + "]");
  }
  std::vector<Valued> out;
  out.push_back(abs_value(f, RealPoint(lo), tol));
  if (lo == hi) return out;
  const QPoly g = f.num().derivative() * f.den() - f.num() * f.den().derivative();
  if (g.degree() > 0)
    for (const auto& iv : sturm_isolate(g, lo, hi)) {
      if (iv.is_point() && (iv.lo == lo || iv.lo == hi)) continue;
      out.push_back(abs_value(f, RealPoint(g, iv), tol));
    }
  out.push_back(abs_value(f, RealPoint(hi), tol));
  return out;
}

SupResult pick_max(const std::vector<Valued>& cands) {
  Rational best_lo = cands.front().lo;
  Rational best_hi = cands.front().hi;
  for (const auto& c : cands) {
    best_lo = std::max(best_lo, c.lo);
    best_hi = std::max(best_hi, c.hi);
  }
  SupResult r;
  if (best_lo == best_hi) {
    r.kind = SupResult::Kind::ExactRational;
    r.lo = r.hi = best_lo;
    for (const auto& c : cands)
      if (c.exact() && c.lo == best_lo &&
          std::none_of(r.attained_at.begin(), r.attained_at.end(), [&](const RealPoint& p) { return p == c.at; }))
        r.attained_at.push_back(c.at);
    return r;
  }
  r.kind = SupResult::Kind::CertifiedEnclosure;
  r.lo = best_lo;
  r.hi = best_hi;
  for (const auto& c : cands)
    if (c.hi >= best_lo) r.attained_at.push_back(c.at);
  return r;
}

}  // namespace

SupResult sup_abs(const CosFn& f, const Rational& lo, const Rational& hi, const Rational& tol) {
  return pick_max(sup_candidates(f, lo, hi, tol));
}

SupResult sup_abs(const std::vector<CosFn>& fs, const Rational& lo, const Rational& hi, const Rational& tol) {
  if (fs.empty()) return sup_abs(CosFn(), lo, hi, tol);
  std::vector<Valued> all;
  for (const auto& f : fs) {
    auto c = sup_candidates(f, lo, hi, tol);
    all.insert(all.end(), c.begin(), c.end());
  }
  return pick_max(all);
}

// ---------------------------------------------------------------------------

std::size_t PiecewisePoly::piece_index(const Rational& t) const {
  std::size_t k = 0;
  while (k < breakpoints.size()) {
    RealPoint b = breakpoints[k];
    if (b.compare(t) > 0) break;
    ++k;
  }
  return k;
}

Rational PiecewisePoly::eval(const Rational& t) const { return pieces.at(piece_index(t)).eval(t); }

PiecewisePoly upper_envelope(const std::vector<QPoly>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("upper_envelope of nothing");
  std::vector<QPoly> polys;
  for (const auto& p : candidates)
    if (std::find(polys.begin(), polys.end(), p) == polys.end()) polys.push_back(p);
  if (polys.size() == 1) return {{}, polys};

  QPoly q(Rational(1));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const QPoly d = polys[i] - polys[j];
      if (d.degree() > 0) q = q * square_free_part(d);
    }
  std::vector<RealPoint> roots;
  if (q.degree() > 0)
    for (const auto& iv : real_roots(square_free_part(q))) roots.emplace_back(q, iv);

  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.emplace_back(0);
  } else {
    samples.push_back(roots.front().interval().lo - Rational(1));
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      RealPoint& a = roots[k];
      RealPoint& b = roots[k + 1];
      while (!(a.interval().hi < b.interval().lo)) {
        a.refine_to(a.interval().width() / Rational(2));
        b.refine_to(b.interval().width() / Rational(2));
      }
      samples.push_back((a.interval().hi + b.interval().lo) / Rational(2));
    }
    samples.push_back(roots.back().interval().hi + Rational(1));
  }

  std::vector<QPoly> winners;
  for (const auto& t : samples) {
    std::size_t best = 0;
    Rational best_v = polys[0].eval(t);
    for (std::size_t k = 1; k < polys.size(); ++k) {
      const Rational v = polys[k].eval(t);
      if (v > best_v) {
        best = k;
        best_v = v;
      }
    }
    winners.push_back(polys[best]);
  }

  PiecewisePoly out;
  out.pieces.push_back(winners.front());
  for (std::size_t k = 1; k < winners.size(); ++k) {
    if (winners[k] == out.pieces.back()) continue;
    out.breakpoints.push_back(roots[k - 1]);
    out.pieces.push_back(winners[k]);
  }
  return out;
}

PiecewisePoly parametric_envelope(const TauPoly& f, const Rational& m_lo, const Rational& m_hi, Substitution s) {
  if (m_hi < m_lo) throw std::domain_error("parametric_envelope: empty range");
  QPoly a = f.coeff(0);
  QPoly b;
  if (s == Substitution::C) {
    if (f.degree() > 1) throw NotAffine("degree " + std::to_string(f.degree()) + " in c");
    b = f.coeff(1);
  } else {
    if (f.degree() > 2 || !f.coeff(1).is_zero())
      throw NotAffine("expected an even polynomial of degree <= 2 in c: " + format_taupoly(f));
    b = f.coeff(2);
  }
  const QPoly f_lo = a + b.scaled(m_lo);
  const QPoly f_hi = a + b.scaled(m_hi);
  return upper_envelope({f_lo, -f_lo, f_hi, -f_hi});
}

// ---------------------------------------------------------------------------

namespace {

Valued poly_value(const QPoly& p, RealPoint at, const Rational& tol) {
  if (at.is_rational()) {
    const Rational v = p.eval(at.value());
    return {at, v, v};
  }
  // p is constant on the roots of the defining polynomial
  const QPoly rem = divmod(p, at.poly()).second;
  if (rem.degree() <= 0) {
    const Rational v = rem.coeff(0);
    return {at, v, v};
  }
  while (true) {
    const auto e = enclose(p, at.interval().lo, at.interval().hi);
    if (e.second - e.first <= tol) return {at, e.first, e.second};
    at.refine_to(at.interval().width() / Rational(2));
    if (at.is_rational()) return poly_value(p, at, tol);
  }
}

// Pointwise larger/smaller of two optional bounds.
std::optional<RealPoint> later(const std::optional<RealPoint>& a, const std::optional<RealPoint>& b) {
  if (!a) return b;
  if (!b) return a;
  return cmp(*a, *b) >= 0 ? a : b;
}

std::optional<RealPoint> earlier(const std::optional<RealPoint>& a, const std::optional<RealPoint>& b) {
  if (!a) return b;
  if (!b) return a;
  return cmp(*a, *b) <= 0 ? a : b;
}

}  // namespace

MinResult piecewise_min(const PiecewisePoly& q, const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                        const Rational& tol) {
  if (q.pieces.size() != q.breakpoints.size() + 1) throw std::invalid_argument("malformed piecewise polynomial");
  if (lo && hi && *hi < *lo) throw std::domain_error("piecewise_min: empty range");
  const std::optional<RealPoint> qlo = lo ? std::optional<RealPoint>(RealPoint(*lo)) : std::nullopt;
  const std::optional<RealPoint> qhi = hi ? std::optional<RealPoint>(RealPoint(*hi)) : std::nullopt;

  std::vector<Valued> cands;
  for (std::size_t k = 0; k < q.pieces.size(); ++k) {
    const QPoly& p = q.pieces[k];
    std::optional<RealPoint> left = k == 0 ? std::nullopt : std::optional<RealPoint>(q.breakpoints[k - 1]);
    std::optional<RealPoint> right =
        k == q.breakpoints.size() ? std::nullopt : std::optional<RealPoint>(q.breakpoints[k]);
    left = later(left, qlo);
    right = earlier(right, qhi);
    if (left && right && cmp(*left, *right) > 0) continue;

    const int deg = p.degree();
    if (deg >= 1) {
      const int lead = p.leading().sign();
      if (!left && (deg % 2 == 0 ? lead : -lead) < 0)
        throw Unbounded("piece " + format_poly(p, 't') + " decreases without bound as tau -> -inf");
      if (!right && lead < 0) throw Unbounded("piece " + format_poly(p, 't') + " decreases without bound as tau -> +inf");
    }

    if (left) cands.push_back(poly_value(p, *left, tol));
    if (deg >= 2)
      for (const auto& iv : real_roots(p.derivative())) {
        RealPoint r(p.derivative(), iv);
        if (left && cmp(r, *left) <= 0) continue;
        if (right && cmp(r, *right) >= 0) continue;
        cands.push_back(poly_value(p, r, tol));
      }
    if (right) cands.push_back(poly_value(p, *right, tol));
    if (!left && !right) cands.push_back(poly_value(p, RealPoint(Rational(0)), tol));
  }
  if (cands.empty()) throw std::domain_error("piecewise_min: query range misses every piece");

  Rational best_hi = cands.front().hi;
  Rational best_lo = cands.front().lo;
  for (const auto& c : cands) {
    best_hi = std::min(best_hi, c.hi);
    best_lo = std::min(best_lo, c.lo);
  }
  for (const auto& c : cands)
    if (c.exact() && c.lo == best_hi && best_lo == best_hi) return {c.at, c.lo, c.hi};
  for (const auto& c : cands)
    if (c.hi == best_hi) return {c.at, best_lo, best_hi};
  throw std::logic_error("piecewise_min: no candidate selected");
}

}  // namespace lfa
