#include "lfa/symbols.hpp"

#include <stdexcept>

#include "lfa/errors.hpp"

namespace lfa {

Rational Stencil::entry(int node_class, int offset) const {
  const auto& r = row(node_class);
  auto it = r.find(offset);
  return it == r.end() ? Rational(0) : it->second;
}

bool Stencil::is_symmetric() const {
  for (int k = 0; k < pattern_period; ++k)
    for (const auto& [o, a] : row(k))
      if (entry(k, -o) != a) return false;
  return true;
}

Stencil Stencil::rescaled_h(const Rational& factor) const {
  const Rational scale = pow(factor, h_exponent);
  Stencil out = *this;
  for (auto& r : out.rows)
    for (auto& [o, a] : r) a *= scale;
  return out;
}

HarmonicBasis HarmonicBasis::of_order(int order) {
  switch (order) {
    case 1: return HarmonicBasis({0});
    case 2: return HarmonicBasis({0, 2});
    case 4: return HarmonicBasis({0, 1, 2, 3});
    default: throw std::invalid_argument("harmonic basis order must be 1, 2 or 4");
  }
}

int HarmonicBasis::index_of(int quarter_turns) const {
  const int q = ((quarter_turns % 4) + 4) % 4;
  for (std::size_t k = 0; k < shifts_.size(); ++k)
    if (shifts_[k] == q) return static_cast<int>(k);
  return -1;
}

// ---------------------------------------------------------------------------

ZFn zfn_shift(const ZFn& f, int quarter_turns) {
  auto shift = [quarter_turns](const GPoly& p) {
    std::vector<Gauss> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k) * Gauss::i_pow(quarter_turns * k));
    return GPoly(std::move(c));
  };
  return ZFn(shift(f.num()), shift(f.den()));
}

ZFn zfn_substitute(const ZFn& f, int k) {
  if (k <= 0) throw std::invalid_argument("zfn_substitute expects a positive power");
  auto sub = [k](const GPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Gauss> c(static_cast<std::size_t>(p.degree() * k) + 1);
    for (int j = 0; j <= p.degree(); ++j) c[static_cast<std::size_t>(j * k)] = p.coeff(j);
    return GPoly(std::move(c));
  };
  return ZFn(sub(f.num()), sub(f.den()));
}

ZFn zfn_adjoint(const ZFn& f) {
  if (f.is_zero()) return f;
  auto rev_conj = [](const GPoly& p) {
    std::vector<Gauss> c;
    for (int k = p.degree(); k >= 0; --k) c.push_back(p.coeff(k).conj());
    return GPoly(std::move(c));
  };
  const int dn = f.num().degree();
  const int dd = f.den().degree();
  return ZFn(rev_conj(f.num()).shifted(dd), rev_conj(f.den()).shifted(dn));
}

namespace {

std::complex<double> eval_poly(const GPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + p.coeff(k).to_complex();
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------

SymbolMatrix::SymbolMatrix(HarmonicBasis rows, HarmonicBasis cols, Mat<ZFn> entries, int h_exponent)
    : rows_(std::move(rows)), cols_(std::move(cols)), m_(std::move(entries)), h_exponent_(h_exponent) {
  if (m_.rows() != static_cast<std::size_t>(rows_.order()) || m_.cols() != static_cast<std::size_t>(cols_.order()))
    throw DimensionMismatch("symbol matrix shape does not match its harmonic bases");
}

SymbolMatrix SymbolMatrix::identity(const HarmonicBasis& basis) {
  return SymbolMatrix(basis, basis, Mat<ZFn>::identity(static_cast<std::size_t>(basis.order())), 0);
}

SymbolMatrix SymbolMatrix::zero(const HarmonicBasis& rows, const HarmonicBasis& cols, int h_exponent) {
  return SymbolMatrix(rows, cols,
                      Mat<ZFn>(static_cast<std::size_t>(rows.order()), static_cast<std::size_t>(cols.order())),
                      h_exponent);
}

SymbolMatrix SymbolMatrix::inverse() const {
  if (rows_.order() != cols_.order()) throw DimensionMismatch("inverse of a non-square symbol");
  return SymbolMatrix(cols_, rows_, m_.inverse(), -h_exponent_);
}

SymbolMatrix SymbolMatrix::adjoint() const {
  return SymbolMatrix(cols_, rows_, m_.transposed().map<ZFn>([](const ZFn& f) { return zfn_adjoint(f); }),
                      h_exponent_);
}

SymbolMatrix SymbolMatrix::transposed() const { return SymbolMatrix(cols_, rows_, m_.transposed(), h_exponent_); }

SymbolMatrix SymbolMatrix::scaled(const ZFn& s) const { return SymbolMatrix(rows_, cols_, s * m_, h_exponent_); }

std::complex<double> SymbolMatrix::eval(std::size_t i, std::size_t j, double theta) const {
  const ZFn& f = m_(i, j);
  const std::complex<double> z = std::polar(1.0, theta);
  return eval_poly(f.num(), z) / eval_poly(f.den(), z);
}

SymbolMatrix operator*(const SymbolMatrix& a, const SymbolMatrix& b) {
  if (!(a.cols_ == b.rows_)) throw DimensionMismatch("symbol product over incompatible harmonic bases");
  return SymbolMatrix(a.rows_, b.cols_, a.m_ * b.m_, a.h_exponent_ + b.h_exponent_);
}

namespace {

int combined_exponent(const SymbolMatrix& a, const SymbolMatrix& b) {
  if (a.is_zero()) return b.h_exponent();
  if (b.is_zero()) return a.h_exponent();
  if (a.h_exponent() != b.h_exponent()) throw DimensionMismatch("adding symbols with different h-exponents");
  return a.h_exponent();
}

}  // namespace

SymbolMatrix operator+(const SymbolMatrix& a, const SymbolMatrix& b) {
  if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_)) throw DimensionMismatch("symbol sum over different bases");
  return SymbolMatrix(a.rows_, a.cols_, a.m_ + b.m_, combined_exponent(a, b));
}

SymbolMatrix operator-(const SymbolMatrix& a, const SymbolMatrix& b) {
  if (!(a.rows_ == b.rows_) || !(a.cols_ == b.cols_)) throw DimensionMismatch("symbol difference over different bases");
  return SymbolMatrix(a.rows_, a.cols_, a.m_ - b.m_, combined_exponent(a, b));
}

// ---------------------------------------------------------------------------

std::vector<LaurentSymbol> stencil_symbol(const Stencil& s) {
  if (s.pattern_period == 1) return {LaurentSymbol::real(s.row(0), s.h_exponent)};
  if (s.pattern_period != 2) throw std::invalid_argument("stencil pattern period must be 1 or 2");
  std::map<int, Rational> band;
  std::map<int, Rational> alternating;
  for (int k = 0; k < 2; ++k)
    for (const auto& [o, a] : s.row(k)) {
      band[o];
      alternating[o];
    }
  for (auto& [o, a] : band) {
    const Rational even = s.entry(0, o);
    const Rational odd = s.entry(1, o);
    a = (even + odd) / Rational(2);
    alternating[o] = (even - odd) / Rational(2);
  }
  return {LaurentSymbol::real(band, s.h_exponent), LaurentSymbol::real(alternating, s.h_exponent)};
}

SymbolMatrix expand_harmonics(const std::vector<LaurentSymbol>& symbols, const HarmonicBasis& basis) {
  if (symbols.empty() || symbols.size() > 2) throw std::invalid_argument("expand_harmonics expects one or two symbols");
  const auto n = static_cast<std::size_t>(basis.order());
  const int h = symbols.front().h_exponent();
  Mat<ZFn> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const int q = basis.shift(k);
    m(k, k) += symbols[0].shifted(q).to_zfn();
    if (symbols.size() == 2 && !symbols[1].is_zero()) {
      const int target = basis.index_of(q + 2);
      if (target < 0) throw BasisTooSmall("alternating stencil couples theta and theta+pi; basis lacks pi");
      m(static_cast<std::size_t>(target), k) += symbols[1].shifted(q).to_zfn();
    }
  }
  return SymbolMatrix(basis, basis, std::move(m), h);
}

SymbolMatrix coarse_symbol(const Stencil& fine_stencil, int coarse_order) {
  const Stencil coarse = fine_stencil.rescaled_h(Rational(2));
  const SymbolMatrix in_w = expand_harmonics(stencil_symbol(coarse), HarmonicBasis::of_order(coarse_order));
  return SymbolMatrix(in_w.row_basis(), in_w.col_basis(),
                      in_w.entries().map<ZFn>([](const ZFn& f) { return zfn_substitute(f, 2); }),
                      in_w.h_exponent());
}

SymbolMatrix prolongation_symbol(const Refinement& r) {
  const int pc = r.coarse_period;
  if ((pc != 1 && pc != 2) || static_cast<int>(r.weights.size()) != pc)
    throw SingularAnsatz("refinement data must describe 1 or 2 coarse node classes");
  const int fine_order = 2 * pc;
  const HarmonicBasis fine = HarmonicBasis::of_order(fine_order);
  const HarmonicBasis coarse = HarmonicBasis::of_order(pc);
  const auto nf = static_cast<std::size_t>(fine_order);

  // Ansatz matrix: value of the fine harmonic q at a node of residue class res,
  // divided by z^j, is i^{q * res}.
  Mat<ZFn> ansatz(nf, nf);
  for (std::size_t res = 0; res < nf; ++res)
    for (std::size_t k = 0; k < nf; ++k)
      ansatz(res, k) = ZFn(Gauss::i_pow(fine.shift(k) * static_cast<int>(res)));
  Mat<ZFn> solver;
  try {
    solver = ansatz.inverse();
  } catch (const std::domain_error&) {
    throw SingularAnsatz("interpolation system for the prolongation symbol is singular");
  }

  Mat<ZFn> p(nf, static_cast<std::size_t>(pc));
  for (int m = 0; m < pc; ++m) {
    // Coarse harmonic m at coarse node J equals (z i^m)^{2J} = z^{2J} (-1)^{mJ}.
    Mat<ZFn> rhs(nf, 1);
    for (int res = 0; res < fine_order; ++res) {
      std::map<int, Gauss> g;
      for (int k = 0; k < pc; ++k)
        for (const auto& [d, w] : r.weights[static_cast<std::size_t>(k)]) {
          if (((res - d) % 2 + 2) % 2 != 0) continue;
          const int J = (res - d) / 2;
          if (((J % pc) + pc) % pc != k) continue;
          const int sign = (m * J) % 2 == 0 ? 1 : -1;
          g[-d] += Gauss(w * Rational(sign));
        }
      rhs(static_cast<std::size_t>(res), 0) = LaurentSymbol(g, 0).to_zfn();
    }
    const Mat<ZFn> a = solver * rhs;
    for (std::size_t k = 0; k < nf; ++k) p(k, static_cast<std::size_t>(m)) = a(k, 0);
  }
  return SymbolMatrix(fine, coarse, std::move(p), 0);
}

}  // namespace lfa
