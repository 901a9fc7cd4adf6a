#pragma once

#include <optional>
#include <vector>

#include "liethomas/expr.hpp"
#include "liethomas/jet_polynomial.hpp"
#include "liethomas/prolongation.hpp"

namespace lie_thomas {

/// Constants of u_xy + alpha u_x + beta u_y + gamma u_x u_y = 0, each either a
/// rational or a free parameter.
struct ThomasParams {
  Expr alpha = parameter("alpha");
  Expr beta = parameter("beta");
  Expr gamma = parameter("gamma");

  static ThomasParams symbolic() { return {}; }
  static ThomasParams numeric(const Rational& a, const Rational& b, const Rational& c);

  bool is_numeric() const { return alpha.is_constant() && beta.is_constant() && gamma.is_constant(); }
  /// alpha > 0 and beta > 0, the chemical exchange regime. Informational only.
  bool exchange_regime() const;
  /// Substitutes alpha, beta, gamma by the values held here.
  Expr bind(const Expr& e) const;
  NumericBindings numeric_bindings() const;
  void validate() const;
};

Expr thomas_delta(const ThomasParams& p);

/// u_xy -> -(alpha u_x + beta u_y + gamma u_x u_y).
Bindings solution_manifold(const ThomasParams& p);

struct DeterminingEquation {
  JetMonomial monomial;
  Expr coefficient;
};

struct DeterminingSystem {
  std::vector<DeterminingEquation> equations;
};

/// The twelve monomials of the determining table in row order.
const std::vector<JetMonomial>& determining_monomials();

DeterminingSystem determining_equations(const ThomasParams& p);

struct SymmetryCheck {
  bool is_symmetry = false;
  JetPolynomial residual;
};

SymmetryCheck check_symmetry(const VectorField& vf, const ThomasParams& p);

/// alpha g_x + beta g_y + g_xy.
Expr linear_operator(const Expr& g, const ThomasParams& p);

/// (-k gamma x + c, k gamma y + b, -(g/gamma) e^{-gamma u} + k(beta x - alpha y) + a).
/// Throws SymbolicError when g provably fails the linear equation.
VectorField general_symmetry(const Expr& a, const Expr& b, const Expr& c, const Expr& k, const Expr& g,
                             const ThomasParams& p);

}  // namespace lie_thomas
