#pragma once

#include <string>
#include <vector>

#include "lfa/symbols.hpp"

namespace lfa {

enum class DiscName { P1Courant, P2Spline, P2Nodal };

/// Diagonal of the stiffness matrix, one value per node class, times h^h_exponent.
struct JacobiDiag {
  std::vector<Rational> per_class;
  int h_exponent = -1;

  bool is_constant() const;
};

struct Discretization {
  DiscName name;
  Stencil mass;
  Stencil stiffness;
  JacobiDiag jacobi_diag;
  Refinement refinement;
  int harmonic_order = 2;
  Rational node_spacing_ratio{1};
};

Discretization p1_courant();
Discretization p2_spline();
Discretization p2_nodal();

Discretization make_discretization(DiscName name);
/// "p1", "p2spline", "p2nodal"; throws ParseError otherwise.
DiscName parse_disc_name(const std::string& id);
std::string disc_id(DiscName name);
std::vector<DiscName> all_discretizations();

SymbolMatrix derive_prolongation(const Discretization& d);

/// Quadratic B-spline with knots t, t+s, t+2s, t+3s.
Rational quadratic_bspline(const Rational& x, const Rational& t, const Rational& s);

/// Coarse B-spline as a combination of fine B-splines (h = 1, offsets are in
/// fine-node steps). Computed from an exact overdetermined collocation solve.
std::map<int, Rational> spline_refinement_mask();

/// Quadratic Lagrange shape functions on the reference element [0, 1] with
/// nodes 0, 1/2, 1.
Rational lagrange_p2(int node, const Rational& s);

}  // namespace lfa
