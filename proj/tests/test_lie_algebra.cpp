#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "liethomas/lie_algebra.hpp"
#include "liethomas/parser.hpp"
#include "liethomas/solution_families.hpp"

using namespace lie_thomas;

namespace {

using E = AlgebraElement;

const Expr kEps = parameter("eps");

E random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  return E::coords(Rational(d(rng), 1 + std::abs(d(rng))), d(rng), d(rng), d(rng));
}

double coord(const E& v, int k, double eps, const ThomasParams& p) {
  NumericBindings b = p.numeric_bindings();
  b["eps"] = eps;
  return evaluate(v.a[k], b);
}

}  // namespace

TEST_CASE("brackets of the basis") {
  auto p = ThomasParams::symbolic();
  CHECK(commutator(E::basis(1), E::basis(4), p).str() == "-gamma*v1 + beta*v3");
  CHECK(commutator(E::basis(2), E::basis(4), p).str() == "gamma*v2 - alpha*v3");
  CHECK(equivalent(commutator(E::basis(1), E::basis(2), p), E{}));
  CHECK(equivalent(commutator(E::basis(3), E::basis(4), p), E{}));
}

TEST_CASE("commutator table against the printed one") {
  auto p = ThomasParams::symbolic();
  const Expr g = function("f", {"x", "y"});
  auto element = [&](int i) { return i == 5 ? E::from_g(g) : E::basis(i); };
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      E computed = commutator(element(i), element(j), p);
      if (i == 5 && j == 4) {
        // printed v_psi; antisymmetry with [v4, v_g] = v_psi forces -v_psi
        CHECK_FALSE(equivalent(computed, published_commutator(5, 4, g, p)));
        CHECK(equivalent(computed, E::from_g(-psi_of(g, p))));
      } else {
        CHECK(equivalent(computed, published_commutator(i, j, g, p)));
      }
    }
  }
  CHECK(equivalent(commutator(E::basis(4), E::from_g(g), p), E::from_g(psi_of(g, p))));
  CHECK(equivalent(E::from_g(psi_of(g, p)),
                   E::from_g(parse("-gamma*x*f_x + gamma*y*f_y - gamma*(beta*x - alpha*y)*f"))));
}

TEST_CASE("antisymmetry and Jacobi identity on random elements") {
  auto p = ThomasParams::symbolic();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    E a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(equivalent(commutator(a, b, p), Expr(-1) * commutator(b, a, p)));
    E jac = commutator(a, commutator(b, c, p), p) + commutator(b, commutator(c, a, p), p) +
            commutator(c, commutator(a, b, p), p);
    CHECK(equivalent(jac, E{}));
  }
}

TEST_CASE("field decomposition round-trips") {
  auto p = ThomasParams::symbolic();
  E v = E::coords(1, -2, Rational(3, 4), 5);
  CHECK(equivalent(from_field(to_field(v, p), p), v));
  CHECK(equivalent(from_field(bracket(to_field(E::basis(1), p), to_field(E::basis(4), p)), p),
                   commutator(E::basis(1), E::basis(4), p)));
  CHECK_THROWS_AS(from_field({x_var() * x_var(), Expr(0), Expr(0)}, p), SymbolicError);
}

TEST_CASE("adjoint table: closed forms, Lie series and the printed entries") {
  auto p = ThomasParams::symbolic();
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      LieSeriesResult r = adjoint_lie_series(i, kEps, E::basis(j), p);
      CHECK(equivalent(r.closed_form, adjoint(i, kEps, E::basis(j), p)));
      if (i != 4) CHECK(r.terminated);
      if (i == 4 && j == 2) {
        CHECK_FALSE(equivalent(r.closed_form, published_adjoint(4, 2, kEps, p)));
      } else {
        CHECK(equivalent(r.closed_form, published_adjoint(i, j, kEps, p)));
      }
    }
  }
  E v42 = adjoint(4, kEps, E::basis(2), p);
  CHECK(equivalent(v42, E::coords(0, exp(p.gamma * kEps), -(p.alpha / p.gamma) * (exp(p.gamma * kEps) - 1), 0)));
}

TEST_CASE("v4 row matches the numeric Lie series") {
  auto p = ThomasParams::numeric(Rational(1, 2), 2, Rational(3, 2));
  for (double eps : {0.1, 1.0}) {
    for (int j = 1; j <= 4; ++j) {
      std::array<double, 4> w{};
      w[j - 1] = 1.0;
      auto series = adjoint_series_numeric(4, eps, w, p, 60);
      E closed = adjoint(4, kEps, E::basis(j), p);
      for (int k = 0; k < 4; ++k) CHECK(series[k] == doctest::Approx(coord(closed, k, eps, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("adjoint action is a group action") {
  auto p = ThomasParams::symbolic();
  E w = E::coords(1, 2, 3, 1);
  Expr e1 = parameter("e1"), e2 = parameter("e2");
  for (int i = 1; i <= 4; ++i) {
    CHECK(equivalent(adjoint(i, e1, adjoint(i, e2, w, p), p), adjoint(i, e1 + e2, w, p)));
    CHECK(equivalent(adjoint(i, Expr(0), w, p), w));
  }
}

TEST_CASE("group flows integrate the generators") {
  NumericParams np{0.7, 1.3, 0.9};
  auto p = ThomasParams::numeric(Rational(7, 10), Rational(13, 10), Rational(9, 10));
  Point pt{0.4, -0.6, 0.25};
  for (int i = 1; i <= 4; ++i) {
    VectorField v = to_field(E::basis(i), p);
    for (double eps : {-0.3, 0.5}) {
      CAPTURE(i);
      const double h = 1e-6;
      Point a = group_action(i, eps + h, pt, np), b = group_action(i, eps - h, pt, np);
      Point q = group_action(i, eps, pt, np);
      NumericBindings at{{"x", q[0]}, {"y", q[1]}, {"u", q[2]}};
      CHECK((a[0] - b[0]) / (2 * h) == doctest::Approx(evaluate(v.xi, at)).epsilon(1e-7));
      CHECK((a[1] - b[1]) / (2 * h) == doctest::Approx(evaluate(v.eta, at)).epsilon(1e-7));
      CHECK((a[2] - b[2]) / (2 * h) == doctest::Approx(evaluate(v.phi, at)).epsilon(1e-7));
      Point twice = group_action(i, eps, group_action(i, 0.2, pt, np), np);
      Point once = group_action(i, eps + 0.2, pt, np);
      for (int k = 0; k < 3; ++k) CHECK(twice[k] == doctest::Approx(once[k]));
    }
  }
  GroupWord word{{{1, 0.3}, {4, -0.2}, {3, 1.0}, {2, 0.5}}};
  Point back = word.inverse().apply(word.apply(pt, np), np);
  for (int k = 0; k < 3; ++k) CHECK(back[k] == doctest::Approx(pt[k]));
}

TEST_CASE("G_g as printed is the flow of v_{-gamma g}") {
  NumericParams np{1.0, 1.0, 2.0};
  Expr g = parse("exp(x - y/2)");
  Point pt{0.3, 0.1, -0.4};
  const double h = 1e-6;
  Point a = group_action_g(g, h, pt, np), b = group_action_g(g, -h, pt, np);
  double gv = std::exp(0.3 - 0.05);
  // v_{-gamma g} has phi = g e^{-gamma u}
  CHECK((a[2] - b[2]) / (2 * h) == doctest::Approx(gv * std::exp(-2.0 * -0.4)).epsilon(1e-7));
  CHECK_THROWS_AS(group_action_g(Expr(1), -10.0, pt, np), DomainError);
}

TEST_CASE("transported solutions stay solutions") {
  NumericParams np{1.0, 1.0, 1.0};
  Solution f = *case21a_solution(np, 1, 2, -1, 1.0, 0.0).solution;
  GridSpec grid{-1.5, 1.5, -1.5, 1.5, 12, 12};
  for (int i = 1; i <= 4; ++i) {
    for (double eps : {-0.3, 0.3}) {
      CAPTURE(i);
      CHECK(residual_grid(transform_solution(i, eps, f, np), grid, np).max_residual < 1e-10);
    }
  }
  CHECK(residual_grid(transform_solution_g(Expr(1), 0.2, f, np), grid, np).max_residual < 1e-10);
  // u4 as written out for f = 0
  Solution zero = constant_solution(0.0).solution.value();
  Solution u4 = transform_solution(4, 0.5, zero, np);
  double x = 0.7, y = -0.4;
  CHECK(u4(x, y).v == doctest::Approx(x * (std::exp(0.5) - 1) + y * (std::exp(-0.5) - 1)));
}

TEST_CASE("translation shifts the logarithmic family constant") {
  NumericParams np{1.0, 1.0, 2.0};
  const double eps = 0.4;
  Solution shifted = transform_solution(1, eps, *case31a_solution(np, 5.0, 0.0).solution, np);
  Solution expected = *case31a_solution(np, 5.0 - np.gamma * eps, 0.0).solution;
  for (double x : {-1.0, 0.0, 1.3}) {
    for (double y : {-0.5, 0.8}) CHECK(shifted(x, y).v == doctest::Approx(expected(x, y).v).epsilon(1e-14));
  }
}

TEST_CASE("printing") {
  E v = E::coords(Expr(0), Expr(0), parameter("beta"), Expr(0)) + Expr(-1) * parameter("gamma") * E::basis(1);
  CHECK(v.str() == "-gamma*v1 + beta*v3");
  CHECK(v.latex() == "-\\gamma v_{1} + \\beta v_{3}");
}
