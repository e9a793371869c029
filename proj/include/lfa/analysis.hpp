#pragma once

#include <vector>

#include "lfa/discretization.hpp"
#include "lfa/qe.hpp"
#include "lfa/taupoly.hpp"

namespace lfa {

/// Symbol matrix polynomial in tau: sum_k tau^k terms[k].
struct TauSymbol {
  std::vector<SymbolMatrix> terms;

  SymbolMatrix at(const Rational& tau) const;
  int h_exponent() const { return terms.front().h_exponent(); }
};

struct EigenSet {
  int zeros = 0;
  std::vector<CosFn> eigenvalues;
};

struct TauEigenSet {
  int zeros = 0;
  std::vector<TauPoly> eigenvalues;
};

/// Stiffness and mass symbols over the discretization's own harmonic basis.
SymbolMatrix stiffness_block(const Discretization& d);
SymbolMatrix mass_block(const Discretization& d);
/// Coarse stiffness in the fine variable (coarse spacing 2h).
SymbolMatrix coarse_stiffness(const Discretization& d);
/// Restriction symbol 2 P^* (scaled adjoint of the prolongation).
SymbolMatrix restriction_symbol(const SymbolMatrix& prolongation);

/// I - tau diag(K)^{-1} K over `basis`. Throws UnsupportedSmoother.
TauSymbol smoother_symbol(const Discretization& d, const HarmonicBasis& basis);
/// I - P Kc^{-1} R K. Throws CoarseSymbolZeroDivisor.
SymbolMatrix coarse_correction(const Discretization& d);
/// S C S with damped Jacobi, P1 only. Throws UnsupportedSmoother otherwise.
TauSymbol twogrid_symbol(const Discretization& d);
/// h^{-2} M C K^{-1}.
SymbolMatrix approx_symbol(const Discretization& d);

/// Throws IrreducibleSpectrum or NotHermitian.
EigenSet eigenvalues(const SymbolMatrix& m);
TauEigenSet eigenvalues(const TauSymbol& m);

const std::vector<CosFn>& spectral_radius_fn(const EigenSet& e);
const std::vector<TauPoly>& spectral_radius_fn(const TauEigenSet& e);

inline Rational global_estimate_constant(const Rational& c_a) { return Rational(4) * c_a; }

struct ApproxReport {
  EigenSet eigen;
  SupResult c_a;
  Rational spacing_ratio{1};

  /// C_A (h / h_hat)^2; exact results only.
  Rational normalized() const;
  Rational lemma_constant() const { return global_estimate_constant(c_a.value()); }
};

ApproxReport approx_report(const Discretization& d, const Rational& tol = Rational(1, 1000000000));

/// c-range of the high frequencies, theta in [pi/2, 3pi/2].
inline Rational high_freq_lo() { return Rational(-1); }
inline Rational high_freq_hi() { return Rational(0); }

}  // namespace lfa
