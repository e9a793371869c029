#include "lfa/analysis.hpp"

#include <stdexcept>

#include "lfa/errors.hpp"

namespace lfa {

namespace {

void require_dimensionless(const SymbolMatrix& m, const char* what) {
  if (m.h_exponent() != 0)
    throw DimensionMismatch(std::string(what) + " carries h^" + std::to_string(m.h_exponent()));
}

// Square root of a polynomial over Q(i), if it is a perfect square.
bool poly_sqrt(const GPoly& p, GPoly& root) {
  if (p.is_zero()) {
    root = GPoly();
    return true;
  }
  if (p.degree() % 2 != 0) return false;
  const int m = p.degree() / 2;
  bool ok = false;
  const Gauss lead = sqrt_exact(p.leading(), ok);
  if (!ok) return false;
  std::vector<Gauss> s(static_cast<std::size_t>(m) + 1);
  s[static_cast<std::size_t>(m)] = lead;
  for (int j = 1; j <= m; ++j) {
    // Coefficient of x^{2m-j} in s^2 determines s_{m-j}.
    Gauss acc = p.coeff(2 * m - j);
    for (int a = m - j + 1; a <= m; ++a) {
      const int b = 2 * m - j - a;
      if (b > m - j && b <= m) acc -= s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(b)];
    }
    s[static_cast<std::size_t>(m - j)] = acc / (Gauss(2) * lead);
  }
  root = GPoly(std::move(s));
  return root * root == p;
}

bool zfn_sqrt(const ZFn& f, ZFn& root) {
  GPoly n;
  GPoly d;
  if (!poly_sqrt(f.num(), n) || !poly_sqrt(f.den(), d)) return false;
  root = ZFn(n, d);
  return true;
}

// Roots of the monic polynomial sum_k coeffs[k] x^k of degree 1 or 2.
std::vector<ZFn> solve_low_degree(const std::vector<ZFn>& coeffs) {
  const int r = static_cast<int>(coeffs.size()) - 1;
  if (r == 0) return {};
  if (r == 1) return {-coeffs[0]};
  if (r == 2) {
    const ZFn& b = coeffs[1];
    const ZFn& c = coeffs[0];
    const ZFn disc = b * b - ZFn(4) * c;
    ZFn s;
    if (!zfn_sqrt(disc, s))
      throw IrreducibleSpectrum("discriminant " + format_zfn(disc) + " is not a perfect square");
    const ZFn half = ZFn(Gauss(Rational(1, 2)));
    return {half * (-b - s), half * (-b + s)};
  }
  throw IrreducibleSpectrum("characteristic polynomial keeps degree " + std::to_string(r) + " after deflation");
}

int leading_zeros(const auto& coeffs) {
  int m = 0;
  while (m < static_cast<int>(coeffs.size()) && coeffs[static_cast<std::size_t>(m)].is_zero()) ++m;
  return m;
}

QPoly polynomial_in_c(const ZFn& f) {
  const CosFn g = cosine_form(f);
  if (!g.is_polynomial()) throw IrreducibleSpectrum("tau-dependent eigenvalue is not polynomial in c");
  return g.num().scaled(Rational(1) / g.den().leading());
}

}  // namespace

SymbolMatrix TauSymbol::at(const Rational& tau) const {
  SymbolMatrix acc = terms.front();
  Rational power(1);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    power *= tau;
    acc = acc + terms[k].scaled(ZFn(Gauss(power)));
  }
  return acc;
}

SymbolMatrix stiffness_block(const Discretization& d) {
  return expand_harmonics(stencil_symbol(d.stiffness), HarmonicBasis::of_order(d.harmonic_order));
}

SymbolMatrix mass_block(const Discretization& d) {
  return expand_harmonics(stencil_symbol(d.mass), HarmonicBasis::of_order(d.harmonic_order));
}

SymbolMatrix coarse_stiffness(const Discretization& d) { return coarse_symbol(d.stiffness, d.harmonic_order / 2); }

SymbolMatrix restriction_symbol(const SymbolMatrix& prolongation) {
  return prolongation.adjoint().scaled(ZFn(Gauss(2)));
}

TauSymbol smoother_symbol(const Discretization& d, const HarmonicBasis& basis) {
  if (!d.jacobi_diag.is_constant())
    throw UnsupportedSmoother("damped Jacobi needs a constant stiffness diagonal (" + disc_id(d.name) + ")");
  const SymbolMatrix k = expand_harmonics(stencil_symbol(d.stiffness), basis);
  const Rational inv_diag = Rational(1) / d.jacobi_diag.per_class.front();
  const SymbolMatrix x =
      k.scaled(ZFn(Gauss(-inv_diag))).with_h_exponent(k.h_exponent() - d.jacobi_diag.h_exponent);
  require_dimensionless(x, "smoother update");
  return {{SymbolMatrix::identity(basis), x}};
}

SymbolMatrix coarse_correction(const Discretization& d) {
  const SymbolMatrix k = stiffness_block(d);
  const SymbolMatrix p = derive_prolongation(d);
  const SymbolMatrix kc = coarse_stiffness(d);
  SymbolMatrix kc_inv;
  try {
    kc_inv = kc.inverse();
  } catch (const std::domain_error&) {
    throw CoarseSymbolZeroDivisor("coarse stiffness symbol of " + disc_id(d.name) + " is singular");
  }
  const SymbolMatrix c = SymbolMatrix::identity(k.row_basis()) - p * kc_inv * restriction_symbol(p) * k;
  require_dimensionless(c, "coarse-grid correction");
  return c;
}

TauSymbol twogrid_symbol(const Discretization& d) {
  if (d.name != DiscName::P1Courant)
    throw UnsupportedSmoother("two-grid analysis is available for p1 only, not " + disc_id(d.name));
  const TauSymbol s = smoother_symbol(d, HarmonicBasis::of_order(d.harmonic_order));
  const SymbolMatrix& x = s.terms[1];
  const SymbolMatrix c = coarse_correction(d);
  return {{c, x * c + c * x, x * c * x}};
}

SymbolMatrix approx_symbol(const Discretization& d) {
  const SymbolMatrix g = mass_block(d) * coarse_correction(d) * stiffness_block(d).inverse();
  if (g.h_exponent() != 2) throw DimensionMismatch("M C K^-1 should scale like h^2");
  return g.with_h_exponent(0);
}

EigenSet eigenvalues(const SymbolMatrix& m) {
  require_dimensionless(m, "eigenvalue input");
  if (m.n_rows() != m.n_cols() || m.n_rows() > 4) throw DimensionMismatch("eigenvalues need a square symbol of size <= 4");
  const std::vector<ZFn> cp = m.entries().charpoly();
  EigenSet out;
  out.zeros = leading_zeros(cp);
  for (const auto& z : solve_low_degree({cp.begin() + out.zeros, cp.end()})) out.eigenvalues.push_back(cosine_form(z));
  return out;
}

TauEigenSet eigenvalues(const TauSymbol& m) {
  for (const auto& t : m.terms) require_dimensionless(t, "eigenvalue input");
  const auto& first = m.terms.front();
  if (first.n_rows() != first.n_cols() || first.n_rows() > 4)
    throw DimensionMismatch("eigenvalues need a square symbol of size <= 4");

  using TPoly = Poly<ZFn>;
  Mat<TPoly> e(first.n_rows(), first.n_cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) {
      std::vector<ZFn> c;
      for (const auto& t : m.terms) c.push_back(t(i, j));
      e(i, j) = TPoly(std::move(c));
    }
  const std::vector<TPoly> cp = e.charpoly();
  TauEigenSet out;
  out.zeros = leading_zeros(cp);
  const std::vector<TPoly> rest(cp.begin() + out.zeros, cp.end());

  std::vector<TPoly> roots;
  if (rest.size() == 2) {
    roots.push_back(-rest[0]);
  } else if (rest.size() > 2) {
    std::vector<ZFn> frozen;
    for (const auto& c : rest) {
      if (c.degree() > 0) throw IrreducibleSpectrum("tau-dependent characteristic polynomial of degree > 1");
      frozen.push_back(c.coeff(0));
    }
    for (const auto& z : solve_low_degree(frozen)) roots.emplace_back(z);
  }

  for (const auto& r : roots) {
    std::vector<QPoly> in_c;  // in_c[k] = coefficient of tau^k
    for (int k = 0; k <= r.degree(); ++k) in_c.push_back(polynomial_in_c(r.coeff(k)));
    int deg_c = -1;
    for (const auto& p : in_c) deg_c = std::max(deg_c, p.degree());
    std::vector<QPoly> by_c(static_cast<std::size_t>(std::max(deg_c, 0)) + 1);
    for (int j = 0; j <= deg_c; ++j) {
      std::vector<Rational> tau_coeffs;
      for (const auto& p : in_c) tau_coeffs.push_back(p.coeff(j));
      by_c[static_cast<std::size_t>(j)] = QPoly(std::move(tau_coeffs));
    }
    out.eigenvalues.emplace_back(std::move(by_c));
  }
  return out;
}

const std::vector<CosFn>& spectral_radius_fn(const EigenSet& e) { return e.eigenvalues; }
const std::vector<TauPoly>& spectral_radius_fn(const TauEigenSet& e) { return e.eigenvalues; }

Rational ApproxReport::normalized() const { return c_a.value() / (spacing_ratio * spacing_ratio); }

ApproxReport approx_report(const Discretization& d, const Rational& tol) {
  ApproxReport r;
  r.eigen = eigenvalues(approx_symbol(d));
  r.c_a = sup_abs(r.eigen.eigenvalues, Rational(-1), Rational(1), tol);
  r.spacing_ratio = d.node_spacing_ratio;
  return r;
}

}  // namespace lfa
