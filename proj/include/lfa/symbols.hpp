#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "lfa/laurent.hpp"
#include "lfa/matrix.hpp"

namespace lfa {

/// Infinite-grid operator given by one stencil row per node class. Node j
/// belongs to class j mod pattern_period; offsets count grid-node steps.
struct Stencil {
  int pattern_period = 1;
  std::vector<std::map<int, Rational>> rows;
  int h_exponent = 0;

  static Stencil uniform(std::map<int, Rational> row, int h_exponent) { return {1, {std::move(row)}, h_exponent}; }

  const std::map<int, Rational>& row(int node_class) const { return rows.at(static_cast<std::size_t>(node_class)); }
  Rational entry(int node_class, int offset) const;
  /// row[o] == row[-o] for every class (informational).
  bool is_symmetric() const;
  /// Stencil of the same operator on a grid with spacing scaled by `factor`.
  Stencil rescaled_h(const Rational& factor) const;
};

/// Frequency shifts {0}, {0, pi} or {0, pi/2, pi, 3pi/2}, stored as
/// quarter-turn counts q (z -> i^q z).
class HarmonicBasis {
 public:
  static HarmonicBasis of_order(int order);

  int order() const { return static_cast<int>(shifts_.size()); }
  const std::vector<int>& shifts() const { return shifts_; }
  int shift(std::size_t k) const { return shifts_.at(k); }
  bool contains(int quarter_turns) const { return index_of(quarter_turns) >= 0; }
  /// -1 when absent.
  int index_of(int quarter_turns) const;

  friend bool operator==(const HarmonicBasis& a, const HarmonicBasis& b) { return a.shifts_ == b.shifts_; }

 private:
  explicit HarmonicBasis(std::vector<int> shifts) : shifts_(std::move(shifts)) {}
  std::vector<int> shifts_;
};

/// Symbol of an operator restricted to harmonic spans. Column k is the image
/// of the k-th input harmonic expressed in the output harmonics. Entries are
/// rational functions of the fine-grid z = e^{i theta}; the whole matrix
/// carries the factor h^{h_exponent}.
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  SymbolMatrix(HarmonicBasis rows, HarmonicBasis cols, Mat<ZFn> entries, int h_exponent);

  static SymbolMatrix identity(const HarmonicBasis& basis);
  static SymbolMatrix zero(const HarmonicBasis& rows, const HarmonicBasis& cols, int h_exponent = 0);

  const HarmonicBasis& row_basis() const { return rows_; }
  const HarmonicBasis& col_basis() const { return cols_; }
  const Mat<ZFn>& entries() const { return m_; }
  const ZFn& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  int h_exponent() const { return h_exponent_; }
  std::size_t n_rows() const { return m_.rows(); }
  std::size_t n_cols() const { return m_.cols(); }
  bool is_zero() const { return m_.is_zero(); }

  SymbolMatrix inverse() const;
  /// Pointwise conjugate transpose on the unit circle.
  SymbolMatrix adjoint() const;
  SymbolMatrix scaled(const ZFn& s) const;
  SymbolMatrix with_h_exponent(int e) const { return SymbolMatrix(rows_, cols_, m_, e); }
  /// Pointwise transpose (no conjugation).
  SymbolMatrix transposed() const;

  /// Numeric value of entry (i, j) at frequency theta (h factor ignored).
  std::complex<double> eval(std::size_t i, std::size_t j, double theta) const;

  friend SymbolMatrix operator*(const SymbolMatrix& a, const SymbolMatrix& b);
  friend SymbolMatrix operator+(const SymbolMatrix& a, const SymbolMatrix& b);
  friend SymbolMatrix operator-(const SymbolMatrix& a, const SymbolMatrix& b);
  friend bool operator==(const SymbolMatrix& a, const SymbolMatrix& b) {
    return a.h_exponent_ == b.h_exponent_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_;
  }

 private:
  HarmonicBasis rows_ = HarmonicBasis::of_order(1);
  HarmonicBasis cols_ = HarmonicBasis::of_order(1);
  Mat<ZFn> m_;
  int h_exponent_ = 0;
};

/// Coarse-basis values at fine nodes. weights[k] describes the coarse basis
/// function of coarse node class k sitting at coarse node J (fine node 2J):
/// it takes weights[k][d] at fine node 2J + d.
struct Refinement {
  int coarse_period = 1;
  std::vector<std::map<int, Rational>> weights;
};

// z -> i^q z, z -> z^k (k > 0) and the unit-circle conjugate of a z-function.
ZFn zfn_shift(const ZFn& f, int quarter_turns);
ZFn zfn_substitute(const ZFn& f, int k);
ZFn zfn_adjoint(const ZFn& f);

/// [A] for pattern period 1; [A, B] for period 2 where A is the band part and
/// B the alternating part: S phi(theta) = A(theta) phi(theta) + B(theta) phi(theta + pi).
std::vector<LaurentSymbol> stencil_symbol(const Stencil& s);

/// Representation of the operator over the harmonic basis. Throws
/// BasisTooSmall when an alternating part needs pi outside the basis.
SymbolMatrix expand_harmonics(const std::vector<LaurentSymbol>& symbols, const HarmonicBasis& basis);

/// Symbol of the stencil on the coarse grid (spacing 2h), written in the fine
/// variable z and expanded over the coarse harmonics {0} or {0, pi}.
SymbolMatrix coarse_symbol(const Stencil& fine_stencil, int coarse_order);

/// Prolongation symbol: fine harmonics (order 2 * coarse_period) x coarse
/// harmonics (order coarse_period), obtained by matching nodal values of the
/// coarse Fourier mode with the fine harmonic ansatz on each fine-node residue
/// class. Throws SingularAnsatz when that system is singular.
SymbolMatrix prolongation_symbol(const Refinement& r);

}  // namespace lfa
