#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liethomas/determining_system.hpp"
#include "liethomas/lie_algebra.hpp"
#include "liethomas/parser.hpp"
#include "liethomas/prolongation.hpp"

using namespace lie_thomas;

namespace {

Expr P(const char* s) { return parse(s); }

// Determining table as printed, row order preserved.
const std::pair<const char*, const char*> kTable1[] = {
    {"1", "alpha*phi_x + beta*phi_y + phi_xy"},
    {"u_x", "phi_yu - xi_xy + gamma*phi_y - beta*xi_y + alpha*eta_y"},
    {"u_y", "phi_xu - eta_xy + gamma*phi_x - alpha*eta_x + beta*xi_x"},
    {"u_x*u_y", "phi_uu - xi_ux - eta_yu + beta*xi_u + alpha*eta_u + gamma*phi_u"},
    {"u_x^2", "-xi_yu - gamma*xi_y + alpha*xi_u"},
    {"u_y^2", "-eta_xu - gamma*eta_x + beta*eta_u"},
    {"u_x^2*u_y", "-xi_uu"},
    {"u_x*u_y^2", "-eta_uu"},
    {"u_xx", "-xi_y"},
    {"u_yy", "-eta_x"},
    {"u_y*u_xx", "-xi_u"},
    {"u_x*u_yy", "-eta_u"},
};

}  // namespace

TEST_CASE("total derivatives") {
  CHECK(equivalent(total_derivative(P("u_x*u_y"), Axis::X), P("u_xx*u_y + u_x*u_xy")));
  CHECK(equivalent(total_derivative(P("x*u"), Axis::Y), P("x*u_y")));
  CHECK(equivalent(total_derivative(P("xi"), Axis::X), P("xi_x + u_x*xi_u")));
  CHECK(equivalent(total_derivative(P("exp(gamma*u)"), Axis::Y), P("gamma*u_y*exp(gamma*u)")));
  CHECK_THROWS_AS(total_derivative(P("u_xxx"), Axis::X), SymbolicError);
}

TEST_CASE("prolongation agrees with the hand-expanded coefficients") {
  ProlongedField pf = prolong(symbolic_field());
  auto hand = expanded_prolongation_formulas();
  CHECK(pf.phi_x.equivalent_to(JetPolynomial::from_expr(hand[0])));
  CHECK(pf.phi_y.equivalent_to(JetPolynomial::from_expr(hand[1])));
  CHECK(pf.phi_xy.equivalent_to(JetPolynomial::from_expr(hand[2])));
  CHECK(pf.phi_xx.equivalent_to(JetPolynomial::from_expr(hand[3])));
  CHECK(pf.phi_yy.equivalent_to(JetPolynomial::from_expr(hand[4])));
  // no third-order jets survive in phi^xy
  for (const auto& [m, c] : pf.phi_xy.terms()) {
    for (std::size_t i = 5; i < kJetCount; ++i) CHECK(m[i] == 0);
  }
}

TEST_CASE("prolongation of a concrete field") {
  // scaling x d/dx: phi^x = -u_x, phi^xy = -u_xy
  ProlongedField pf = prolong({x_var(), Expr(0), Expr(0)});
  CHECK(equivalent(pf.phi_x.to_expr(), P("-u_x")));
  CHECK(equivalent(pf.phi_xy.to_expr(), P("-u_xy")));
  CHECK(equivalent(pf.phi_xx.to_expr(), P("-2*u_xx")));
  CHECK(pf.phi_yy.is_zero());
}

TEST_CASE("determining equations reproduce the printed table") {
  DeterminingSystem sys = determining_equations(ThomasParams::symbolic());
  REQUIRE(sys.equations.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CAPTURE(i);
    CHECK(sys.equations[i].monomial == monomial_of(kTable1[i].first));
    CHECK(sys.equations[i].coefficient.str() == P(kTable1[i].second).str());
    CHECK(equivalent(sys.equations[i].coefficient, P(kTable1[i].second)));
  }
}

TEST_CASE("determining equations with numeric parameters") {
  auto p = ThomasParams::numeric(1, 2, 3);
  DeterminingSystem sys = determining_equations(p);
  REQUIRE(sys.equations.size() == 12);
  CHECK(equivalent(sys.equations[0].coefficient, P("phi_x + 2*phi_y + phi_xy")));
  CHECK(equivalent(sys.equations[4].coefficient, P("-xi_yu - 3*xi_y + xi_u")));
}

TEST_CASE("the equation and its solution manifold") {
  auto p = ThomasParams::symbolic();
  CHECK(thomas_delta(p) == P("u_xy + alpha*u_x + beta*u_y + gamma*u_x*u_y"));
  CHECK(is_zero(substitute(thomas_delta(p), solution_manifold(p))));
  CHECK_THROWS(ThomasParams::numeric(1, 1, 0).validate());
  CHECK(ThomasParams::numeric(1, 2, 3).exchange_regime());
  CHECK_FALSE(ThomasParams::numeric(-1, 2, 3).exchange_regime());
}

TEST_CASE("symmetry certificate for the finite generators") {
  auto p = ThomasParams::symbolic();
  for (int i = 1; i <= 4; ++i) {
    CAPTURE(i);
    SymmetryCheck c = check_symmetry(to_field(AlgebraElement::basis(i), p), p);
    CHECK(c.is_symmetry);
    CHECK(c.residual.is_zero());
  }
  // x d/du is not a symmetry
  SymmetryCheck bad = check_symmetry({Expr(0), Expr(0), x_var()}, p);
  CHECK_FALSE(bad.is_symmetry);
  CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("v_g is a symmetry exactly when g solves the linear equation") {
  auto p = ThomasParams::symbolic();
  for (int lam : {1, 2, -3}) {
    Expr l(lam);
    Expr mu = -p.alpha * l / (l + p.beta);
    Expr g = exp(l * x_var() + mu * y_var());
    CHECK(is_zero(linear_operator(g, p)));
    CHECK(check_symmetry(to_field(AlgebraElement::from_g(g), p), p).is_symmetry);
  }
  Expr not_a_solution = exp(x_var() + y_var());
  CHECK_FALSE(check_symmetry(to_field(AlgebraElement::from_g(not_a_solution), p), p).is_symmetry);
}

TEST_CASE("closure: g_x, g_y and psi solve the linear equation with g") {
  auto p = ThomasParams::symbolic();
  Expr l(2);
  Expr g = exp(l * x_var() - p.alpha * l / (l + p.beta) * y_var());
  CHECK(is_zero(linear_operator(differentiate(g, x_var()), p)));
  CHECK(is_zero(linear_operator(differentiate(g, y_var()), p)));
  CHECK(is_zero(linear_operator(psi_of(g, p), p)));
}

TEST_CASE("general symmetry") {
  auto p = ThomasParams::symbolic();
  Expr g = exp(x_var() - p.alpha / (1 + p.beta) * y_var());
  VectorField v = general_symmetry(parameter("a"), parameter("b"), parameter("c"), parameter("k"), g, p);
  CHECK(check_symmetry(v, p).is_symmetry);
  CHECK_THROWS_AS(general_symmetry(Expr(0), Expr(0), Expr(0), Expr(0), x_var() * y_var(), p), SymbolicError);
}
