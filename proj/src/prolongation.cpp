#include "liethomas/prolongation.hpp"

#include "liethomas/parser.hpp"

namespace lie_thomas {

Expr total_derivative(const Expr& e, Axis axis) {
  if (max_jet_order(e) > 2) throw SymbolicError("total derivative of a third-order expression");
  const int dx = axis == Axis::X ? 1 : 0;
  const int dy = 1 - dx;
  std::vector<Expr> terms{differentiate(e, axis == Axis::X ? x_var() : y_var())};
  for (int order = 0; order <= 2; ++order) {
    for (int nx = order; nx >= 0; --nx) {
      Expr j = jet(nx, order - nx);
      Expr d = differentiate(e, j);
      if (!d.is_zero()) terms.push_back(jet(nx + dx, order - nx + dy) * d);
    }
  }
  return add(std::move(terms));
}

VectorField symbolic_field() {
  return {function("xi", {"x", "y", "u"}), function("eta", {"x", "y", "u"}), function("phi", {"x", "y", "u"})};
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  return {a.xi + b.xi, a.eta + b.eta, a.phi + b.phi};
}

VectorField operator*(const Expr& s, const VectorField& v) { return {s * v.xi, s * v.eta, s * v.phi}; }

Expr apply(const VectorField& v, const Expr& f) {
  return add({v.xi * differentiate(f, x_var()), v.eta * differentiate(f, y_var()),
              v.phi * differentiate(f, u_var())});
}

ProlongedField prolong(const VectorField& vf) {
  for (const Expr* c : {&vf.xi, &vf.eta, &vf.phi}) {
    if (contains_jet(*c)) throw SymbolicError("vector field coefficient depends on jets: " + c->str());
  }
  const Expr ux = jet(1, 0), uy = jet(0, 1);
  const Expr uxx = jet(2, 0), uxy = jet(1, 1), uyy = jet(0, 2);
  auto Dx = [](const Expr& e) { return total_derivative(e, Axis::X); };
  auto Dy = [](const Expr& e) { return total_derivative(e, Axis::Y); };

  ProlongedField pf;
  pf.base = vf;
  Expr Dx_xi = Dx(vf.xi), Dx_eta = Dx(vf.eta), Dy_xi = Dy(vf.xi), Dy_eta = Dy(vf.eta);
  pf.phi_x = normalize(Dx(vf.phi) - ux * Dx_xi - uy * Dx_eta);
  pf.phi_y = normalize(Dy(vf.phi) - ux * Dy_xi - uy * Dy_eta);
  Expr q = vf.phi - vf.xi * ux - vf.eta * uy;
  pf.phi_xy = normalize(Dx(Dy(q)) + vf.xi * jet(2, 1) + vf.eta * jet(1, 2));
  pf.phi_yy = normalize(Dy(Dy(vf.phi)) - 2 * uxy * Dy_xi - 2 * uyy * Dy_eta - ux * Dy(Dy_xi) - uy * Dy(Dy_eta));
  pf.phi_xx = normalize(Dx(Dx(vf.phi)) - 2 * uxx * Dx_xi - 2 * uxy * Dx_eta - ux * Dx(Dx_xi) - uy * Dx(Dx_eta));
  return pf;
}

Expr apply_prolonged(const ProlongedField& pf, const Expr& target) {
  if (max_jet_order(target) > 2) throw SymbolicError("target depends on third-order jets");
  return add({apply(pf.base, target), pf.phi_x.to_expr() * differentiate(target, jet(1, 0)),
              pf.phi_y.to_expr() * differentiate(target, jet(0, 1)),
              pf.phi_xx.to_expr() * differentiate(target, jet(2, 0)),
              pf.phi_xy.to_expr() * differentiate(target, jet(1, 1)),
              pf.phi_yy.to_expr() * differentiate(target, jet(0, 2))});
}

std::array<Expr, 5> expanded_prolongation_formulas() {
  return {
      parse("phi_x + (phi_u - xi_x)*u_x - eta_x*u_y - xi_u*u_x^2 - eta_u*u_x*u_y"),
      parse("phi_y + (phi_u - eta_y)*u_y - xi_y*u_x - eta_u*u_y^2 - xi_u*u_x*u_y"),
      parse("phi_xy + (phi_yu - xi_xy)*u_x + (phi_xu - eta_xy)*u_y - xi_yu*u_x^2"
            " + (phi_uu - xi_ux - eta_yu)*u_x*u_y - eta_ux*u_y^2 - xi_uu*u_x^2*u_y - eta_uu*u_x*u_y^2"
            " - 2*xi_u*u_x*u_xy - 2*eta_u*u_y*u_xy - xi_y*u_xx - eta_x*u_yy - xi_u*u_y*u_xx - eta_u*u_x*u_yy"
            " + (phi_u - xi_x - eta_y)*u_xy"),
      parse("phi_xx + (2*phi_xu - xi_xx)*u_x - eta_xx*u_y - 2*eta_xu*u_x*u_y"
            " + (phi_uu - 2*xi_xu)*u_x^2 - eta_uu*u_x^2*u_y - 2*eta_x*u_xy"
            " - 2*eta_u*u_x*u_xy + (phi_u - 2*xi_x)*u_xx - 3*xi_u*u_x*u_xx - xi_uu*u_x^3 - eta_u*u_y*u_xx"),
      parse("phi_yy + (2*phi_yu - eta_yy)*u_y - xi_yy*u_x - 2*xi_yu*u_x*u_y"
            " + (phi_uu - 2*eta_yu)*u_y^2 - xi_uu*u_y^2*u_x - 2*xi_y*u_xy"
            " - 2*xi_u*u_y*u_xy + (phi_u - 2*eta_y)*u_yy - 3*eta_u*u_y*u_yy - eta_uu*u_y^3 - xi_u*u_x*u_yy"),
  };
}

}  // namespace lie_thomas
