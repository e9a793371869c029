#include "lfa/discretization.hpp"

#include <stdexcept>

#include "lfa/errors.hpp"

namespace lfa {

bool JacobiDiag::is_constant() const {
  if (per_class.empty()) return false;
  for (const auto& v : per_class)
    if (v != per_class.front()) return false;
  return true;
}

Rational quadratic_bspline(const Rational& x, const Rational& t, const Rational& s) {
  const Rational u = (x - t) / s;
  const Rational half(1, 2);
  if (u < Rational(0) || u >= Rational(3)) return Rational(0);
  if (u < Rational(1)) return half * u * u;
  if (u < Rational(2)) return half * (Rational(-2) * u * u + Rational(6) * u - Rational(3));
  const Rational v = Rational(3) - u;
  return half * v * v;
}

std::map<int, Rational> spline_refinement_mask() {
  // Fine spline d lives on [d - 1, d + 2]; the coarse spline of node 0 on [-2, 4].
  constexpr int lo = -3;
  constexpr int hi = 4;
  const std::size_t n = hi - lo + 1;
  std::vector<Rational> xs;
  for (int k = -8; k <= 12; ++k) xs.emplace_back(k, 2);

  Mat<Rational> a(xs.size(), n);
  Mat<Rational> b(xs.size(), 1);
  for (std::size_t r = 0; r < xs.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = quadratic_bspline(xs[r], Rational(lo + static_cast<int>(c) - 1), 1);
    b(r, 0) = quadratic_bspline(xs[r], Rational(-2), Rational(2));
  }
  const Mat<Rational> at = a.transposed();
  Mat<Rational> w;
  try {
    w = (at * a).inverse() * (at * b);
  } catch (const std::domain_error&) {
    throw SingularAnsatz("B-spline collocation system is singular");
  }
  if (!(a * w == b)) throw SingularAnsatz("coarse B-spline is not in the fine spline space");

  std::map<int, Rational> mask;
  for (std::size_t c = 0; c < n; ++c)
    if (!w(c, 0).is_zero()) mask.emplace(lo + static_cast<int>(c), w(c, 0));
  return mask;
}

Rational lagrange_p2(int node, const Rational& s) {
  switch (node) {
    case 0: return (Rational(1) - s) * (Rational(1) - Rational(2) * s);
    case 1: return Rational(4) * s * (Rational(1) - s);
    case 2: return s * (Rational(2) * s - Rational(1));
    default: throw std::invalid_argument("lagrange_p2: node must be 0, 1 or 2");
  }
}

namespace {

// Coarse nodal basis values at fine nodes. Fine nodes sit h/2 apart, the
// coarse element has length 2h, so it spans 4 fine steps.
Refinement nodal_refinement() {
  std::map<int, Rational> vertex;
  std::map<int, Rational> midpoint;
  for (int d = -4; d <= 4; ++d) {
    // Vertex at the left end of the right element, right end of the left one.
    const Rational s(d < 0 ? -d : d, 4);
    const Rational v = lagrange_p2(0, s);
    if (!v.is_zero()) vertex.emplace(d, v);
  }
  for (int d = -2; d <= 2; ++d) {
    const Rational v = lagrange_p2(1, Rational(d + 2, 4));
    if (!v.is_zero()) midpoint.emplace(d, v);
  }
  return {2, {vertex, midpoint}};
}

}  // namespace

Discretization p1_courant() {
  Discretization d{DiscName::P1Courant,
                   Stencil::uniform({{-1, Rational(1, 6)}, {0, Rational(4, 6)}, {1, Rational(1, 6)}}, 1),
                   Stencil::uniform({{-1, Rational(-1)}, {0, Rational(2)}, {1, Rational(-1)}}, -1),
                   {{Rational(2)}, -1},
                   {1, {{{-1, Rational(1, 2)}, {0, Rational(1)}, {1, Rational(1, 2)}}}},
                   2,
                   Rational(1)};
  return d;
}

Discretization p2_spline() {
  Discretization d{DiscName::P2Spline,
                   Stencil::uniform({{-2, Rational(1, 120)},
                                     {-1, Rational(26, 120)},
                                     {0, Rational(66, 120)},
                                     {1, Rational(26, 120)},
                                     {2, Rational(1, 120)}},
                                    1),
                   Stencil::uniform({{-2, Rational(-1, 6)},
                                     {-1, Rational(-2, 6)},
                                     {0, Rational(1)},
                                     {1, Rational(-2, 6)},
                                     {2, Rational(-1, 6)}},
                                    -1),
                   {{Rational(1)}, -1},
                   {1, {spline_refinement_mask()}},
                   2,
                   Rational(1)};
  return d;
}

Discretization p2_nodal() {
  const Rational m(1, 30);
  const Rational k(1, 3);
  Stencil mass{2,
               {{{-2, -m}, {-1, 2 * m}, {0, 8 * m}, {1, 2 * m}, {2, -m}},
                {{-1, 2 * m}, {0, 16 * m}, {1, 2 * m}}},
               1};
  Stencil stiff{2,
                {{{-2, k}, {-1, -8 * k}, {0, 14 * k}, {1, -8 * k}, {2, k}},
                 {{-1, -8 * k}, {0, 16 * k}, {1, -8 * k}}},
                -1};
  Discretization d{DiscName::P2Nodal, mass, stiff, {{14 * k, 16 * k}, -1}, nodal_refinement(), 4, Rational(1, 2)};
  return d;
}

Discretization make_discretization(DiscName name) {
  switch (name) {
    case DiscName::P1Courant: return p1_courant();
    case DiscName::P2Spline: return p2_spline();
    case DiscName::P2Nodal: return p2_nodal();
  }
  throw std::invalid_argument("unknown discretization");
}

DiscName parse_disc_name(const std::string& id) {
  if (id == "p1") return DiscName::P1Courant;
  if (id == "p2spline") return DiscName::P2Spline;
  if (id == "p2nodal") return DiscName::P2Nodal;
  throw ParseError("unknown discretization '" + id + "' (expected p1, p2spline or p2nodal)");
}

std::string disc_id(DiscName name) {
  switch (name) {
    case DiscName::P1Courant: return "p1";
    case DiscName::P2Spline: return "p2spline";
    case DiscName::P2Nodal: return "p2nodal";
  }
  return "?";
}

std::vector<DiscName> all_discretizations() { return {DiscName::P1Courant, DiscName::P2Spline, DiscName::P2Nodal}; }

SymbolMatrix derive_prolongation(const Discretization& d) {
  SymbolMatrix p = prolongation_symbol(d.refinement);
  if (p.n_rows() != static_cast<std::size_t>(d.harmonic_order))
    throw SingularAnsatz("refinement data does not match the harmonic order of " + disc_id(d.name));
  return p;
}

}  // namespace lfa
