#include "lfa/laurent.hpp"

#include <stdexcept>

#include "lfa/errors.hpp"

namespace lfa {

LaurentSymbol::LaurentSymbol(std::map<int, Gauss> coeffs, int h_exponent) : h_exponent_(h_exponent) {
  for (auto& [o, a] : coeffs)
    if (!a.is_zero()) coeffs_.emplace(o, std::move(a));
}

LaurentSymbol LaurentSymbol::real(const std::map<int, Rational>& coeffs, int h_exponent) {
  std::map<int, Gauss> g;
  for (const auto& [o, a] : coeffs) g.emplace(o, Gauss(a));
  return LaurentSymbol(std::move(g), h_exponent);
}

LaurentSymbol LaurentSymbol::from_poly(const GPoly& p, int shift, int h_exponent) {
  std::map<int, Gauss> g;
  for (int k = 0; k <= p.degree(); ++k) g.emplace(k + shift, p.coeff(k));
  return LaurentSymbol(std::move(g), h_exponent);
}

Gauss LaurentSymbol::coeff(int offset) const {
  auto it = coeffs_.find(offset);
  return it == coeffs_.end() ? Gauss{} : it->second;
}

LaurentSymbol LaurentSymbol::shifted(int quarter_turns) const {
  std::map<int, Gauss> g;
  for (const auto& [o, a] : coeffs_) g.emplace(o, a * Gauss::i_pow(quarter_turns * o));
  return LaurentSymbol(std::move(g), h_exponent_);
}

LaurentSymbol LaurentSymbol::substituted(int k) const {
  if (k == 0) throw std::domain_error("LaurentSymbol: substitution z -> z^0");
  std::map<int, Gauss> g;
  for (const auto& [o, a] : coeffs_) g.emplace(o * k, a);
  return LaurentSymbol(std::move(g), h_exponent_);
}

LaurentSymbol LaurentSymbol::reflected() const { return substituted(-1); }

LaurentSymbol LaurentSymbol::adjoint() const {
  std::map<int, Gauss> g;
  for (const auto& [o, a] : coeffs_) g.emplace(-o, a.conj());
  return LaurentSymbol(std::move(g), h_exponent_);
}

LaurentSymbol LaurentSymbol::scaled(const Gauss& s) const {
  std::map<int, Gauss> g;
  for (const auto& [o, a] : coeffs_) g.emplace(o, a * s);
  return LaurentSymbol(std::move(g), h_exponent_);
}

bool LaurentSymbol::is_hermitian() const {
  for (const auto& [o, a] : coeffs_)
    if (!(coeff(-o) == a.conj())) return false;
  return true;
}

bool LaurentSymbol::is_cosine_symbol() const {
  for (const auto& [o, a] : coeffs_)
    if (!a.is_real() || !(coeff(-o) == a)) return false;
  return true;
}

std::complex<double> LaurentSymbol::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (const auto& [o, a] : coeffs_) acc += a.to_complex() * std::pow(z, o);
  return acc;
}

std::complex<double> LaurentSymbol::eval_theta(double theta) const {
  return eval(std::polar(1.0, theta));
}

ZFn LaurentSymbol::to_zfn() const {
  if (coeffs_.empty()) return {};
  const int lo = min_offset();
  std::vector<Gauss> c(static_cast<std::size_t>(max_offset() - lo) + 1);
  for (const auto& [o, a] : coeffs_) c[static_cast<std::size_t>(o - lo)] = a;
  GPoly num(std::move(c));
  if (lo >= 0) return ZFn(num.shifted(lo));
  return ZFn(num, GPoly::monomial(Gauss(1), -lo));
}

namespace {

void append_term(std::string& out, const Gauss& a, const std::string& var, bool first) {
  std::string coeff;
  bool negative = false;
  if (a.is_real()) {
    negative = a.re().sign() < 0;
    const Rational mag = abs(a.re());
    if (mag != Rational(1) || var.empty()) coeff = mag.to_string();
  } else {
    coeff = a.to_string();
  }
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  out += coeff;
  if (!coeff.empty() && !var.empty() && !a.re().is_integer()) out += "*";
  out += var;
}

std::string power_name(char var, int o) {
  if (o == 0) return "";
  if (o == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(o);
}

}  // namespace

std::string LaurentSymbol::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [o, a] : coeffs_) {
    append_term(out, a, power_name('z', o), first);
    first = false;
  }
  return out;
}

LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.h_exponent_ != b.h_exponent_) throw DimensionMismatch("adding symbols with different h-exponents");
  std::map<int, Gauss> g = a.coeffs_;
  for (const auto& [o, v] : b.coeffs_) g[o] += v;
  return LaurentSymbol(std::move(g), a.h_exponent_);
}

LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b) { return a + b.scaled(Gauss(-1)); }

LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b) {
  std::map<int, Gauss> g;
  for (const auto& [oa, va] : a.coeffs_)
    for (const auto& [ob, vb] : b.coeffs_) g[oa + ob] += va * vb;
  return LaurentSymbol(std::move(g), a.h_exponent_ + b.h_exponent_);
}

QPoly chebyshev(int k) {
  if (k < 0) throw std::domain_error("chebyshev: negative degree");
  QPoly prev(Rational(1));
  if (k == 0) return prev;
  QPoly cur = QPoly::x();
  const QPoly two_c = QPoly::x().scaled(Rational(2));
  for (int j = 1; j < k; ++j) {
    QPoly next = two_c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<QPoly, int> laurent_to_cospoly(const LaurentSymbol& s) {
  if (!s.is_hermitian()) throw NotHermitian("symbol " + s.to_string() + " is not real on the unit circle");
  if (!s.is_cosine_symbol())
    throw NotHermitian("symbol " + s.to_string() + " has sine components; no polynomial in cos(theta) exists");
  QPoly p(s.coeff(0).re());
  for (const auto& [o, a] : s.coeffs())
    if (o > 0) p += chebyshev(o).scaled(Rational(2) * a.re());
  return {p, s.h_exponent()};
}

CosFn cosine_form(const ZFn& f) {
  if (f.is_zero()) return {};
  LaurentSymbol num = LaurentSymbol::from_poly(f.num(), 0, 0);
  LaurentSymbol den = LaurentSymbol::from_poly(f.den(), 0, 0);
  const LaurentSymbol den_adj = den.adjoint();
  num = num * den_adj;
  den = den * den_adj;
  if (!den.is_cosine_symbol()) {
    const LaurentSymbol mirror = den.reflected();
    num = num * mirror;
    den = den * mirror;
  }
  if (!num.is_cosine_symbol())
    throw NotHermitian("rational symbol " + format_zfn(f) + " is not an even real function of theta");
  return CosFn(laurent_to_cospoly(num).first, laurent_to_cospoly(den).first);
}

std::string format_zfn(const ZFn& f) {
  const auto laurent = [](const GPoly& p) { return LaurentSymbol::from_poly(p, 0, 0).to_string(); };
  if (f.den().degree() == 0) return laurent(f.num());
  return "(" + laurent(f.num()) + ")/(" + laurent(f.den()) + ")";
}

}  // namespace lfa
