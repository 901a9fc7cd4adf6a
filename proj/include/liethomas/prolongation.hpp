#pragma once

#include <array>

#include "liethomas/expr.hpp"
#include "liethomas/jet_polynomial.hpp"

namespace lie_thomas {

enum class Axis { X, Y };

/// D_x e = e_x + u_x e_u + u_xx e_{u_x} + u_xy e_{u_y} + ... (and D_y).
/// Inputs may contain jets up to second order.
Expr total_derivative(const Expr& e, Axis axis);

/// Point vector field xi d/dx + eta d/dy + phi d/du.
struct VectorField {
  Expr xi;
  Expr eta;
  Expr phi;
};

/// Fully symbolic field with unknowns xi, eta, phi of (x, y, u).
VectorField symbolic_field();

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator*(const Expr& s, const VectorField& v);

/// Applies v as a derivation: xi f_x + eta f_y + phi f_u.
Expr apply(const VectorField& v, const Expr& f);

struct ProlongedField {
  VectorField base;
  JetPolynomial phi_x;
  JetPolynomial phi_y;
  JetPolynomial phi_xx;
  JetPolynomial phi_xy;
  JetPolynomial phi_yy;
};

ProlongedField prolong(const VectorField& vf);

/// Pr^2 v applied to an expression in x, y, u and jets up to order two.
Expr apply_prolonged(const ProlongedField& pf, const Expr& target);

/// The five prolongation coefficients of the symbolic field written out by
/// hand in expanded form (phi^x, phi^y, phi^xy, phi^xx, phi^yy order).
std::array<Expr, 5> expanded_prolongation_formulas();

}  // namespace lie_thomas
