#include "liethomas/determining_system.hpp"

namespace lie_thomas {

namespace {

bool has_function(const Expr& e) {
  if (e.kind() == NodeKind::Function) return true;
  for (const auto& op : e.operands()) {
    if (has_function(op)) return true;
  }
  return false;
}

}  // namespace

ThomasParams ThomasParams::numeric(const Rational& a, const Rational& b, const Rational& c) {
  ThomasParams p{constant(a), constant(b), constant(c)};
  p.validate();
  return p;
}

bool ThomasParams::exchange_regime() const {
  return is_numeric() && alpha.value().sign() > 0 && beta.value().sign() > 0;
}

void ThomasParams::validate() const {
  if (gamma.is_zero()) throw SymbolicError("gamma must be nonzero");
}

Expr ThomasParams::bind(const Expr& e) const {
  return substitute(e, {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}});
}

NumericBindings ThomasParams::numeric_bindings() const {
  if (!is_numeric()) throw SymbolicError("parameters are symbolic");
  return {{"alpha", alpha.value().to_double()},
          {"beta", beta.value().to_double()},
          {"gamma", gamma.value().to_double()}};
}

Expr thomas_delta(const ThomasParams& p) {
  p.validate();
  const Expr ux = jet(1, 0), uy = jet(0, 1);
  return jet(1, 1) + p.alpha * ux + p.beta * uy + p.gamma * ux * uy;
}

Bindings solution_manifold(const ThomasParams& p) {
  const Expr ux = jet(1, 0), uy = jet(0, 1);
  return {{jet_name(1, 1), -(p.alpha * ux + p.beta * uy + p.gamma * ux * uy)}};
}

const std::vector<JetMonomial>& determining_monomials() {
  static const std::vector<JetMonomial> rows = [] {
    std::vector<JetMonomial> r;
    for (const char* m : {"1", "u_x", "u_y", "u_x*u_y", "u_x^2", "u_y^2", "u_x^2*u_y", "u_x*u_y^2", "u_xx", "u_yy",
                          "u_y*u_xx", "u_x*u_yy"})
      r.push_back(monomial_of(m));
    return r;
  }();
  return rows;
}

namespace {

JetPolynomial invariance_condition(const VectorField& vf, const ThomasParams& p) {
  Expr condition = apply_prolonged(prolong(vf), thomas_delta(p));
  return normalize(substitute(condition, solution_manifold(p)));
}

}  // namespace

DeterminingSystem determining_equations(const ThomasParams& p) {
  JetPolynomial poly = invariance_condition(symbolic_field(), p);
  DeterminingSystem sys;
  for (const auto& m : determining_monomials()) sys.equations.push_back({m, poly.coefficient(m)});
  for (const auto& [m, c] : poly.terms()) {
    bool listed = false;
    for (const auto& row : determining_monomials()) listed = listed || row == m;
    if (!listed) throw SymbolicError("unexpected monomial in determining system: " + monomial_str(m));
  }
  return sys;
}

SymmetryCheck check_symmetry(const VectorField& vf, const ThomasParams& p) {
  SymmetryCheck out;
  out.residual = invariance_condition(vf, p);
  out.is_symmetry = out.residual.is_zero();
  return out;
}

Expr linear_operator(const Expr& g, const ThomasParams& p) {
  Expr gx = differentiate(g, x_var());
  return p.alpha * gx + p.beta * differentiate(g, y_var()) + differentiate(gx, y_var());
}

VectorField general_symmetry(const Expr& a, const Expr& b, const Expr& c, const Expr& k, const Expr& g,
                             const ThomasParams& p) {
  p.validate();
  if (depends_on(g, "u") || contains_jet(g)) throw SymbolicError("g must depend on x and y only");
  Expr lg = linear_operator(g, p);
  if (!is_zero(lg) && !has_function(lg))
    throw SymbolicError("g does not satisfy alpha g_x + beta g_y + g_xy = 0: residual " + expand(lg).str());
  const Expr x = x_var(), y = y_var(), u = u_var();
  return {-k * p.gamma * x + c, k * p.gamma * y + b,
          -(g / p.gamma) * exp(-p.gamma * u) + k * (p.beta * x - p.alpha * y) + a};
}

}  // namespace lie_thomas
