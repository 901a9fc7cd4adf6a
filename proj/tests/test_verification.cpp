#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liethomas/parser.hpp"
#include "liethomas/solution_families.hpp"
#include "liethomas/verification.hpp"

using namespace lie_thomas;

namespace {

const NumericParams kUnit{1.0, 1.0, 1.0};

HyperDual at(const Expr& e, double x, double y) {
  return evaluate_hd(e, {{"x", HyperDual::seed_x(x)}, {"y", HyperDual::seed_y(y)}});
}

}  // namespace

TEST_CASE("hyper-dual derivatives equal symbolic ones on polynomials") {
  for (const char* text : {"x^3*y^2 - 4*x*y + 7", "(x + 2*y)^4", "x^2 - y^5/3 + x*y"}) {
    CAPTURE(text);
    Expr f = parse(text);
    Expr fx = differentiate(f, x_var()), fy = differentiate(f, y_var());
    for (auto [x, y] : {std::pair{0.5, -1.5}, std::pair{2.0, 3.0}}) {
      HyperDual h = at(f, x, y);
      NumericBindings b{{"x", x}, {"y", y}};
      CHECK(h.v == doctest::Approx(evaluate(f, b)).epsilon(1e-15));
      CHECK(h.dx == doctest::Approx(evaluate(fx, b)).epsilon(1e-15));
      CHECK(h.dy == doctest::Approx(evaluate(fy, b)).epsilon(1e-15));
      CHECK(h.dxy == doctest::Approx(evaluate(differentiate(fx, y_var()), b)).epsilon(1e-15));
    }
  }
}

TEST_CASE("hyper-dual derivatives agree with central differences") {
  for (const char* text : {"exp(x*y) + log(2 + x^2*y^2)", "tan(x/3 - y/4)", "arctan(x*y + 1)/(1 + x^2)"}) {
    CAPTURE(text);
    Expr f = parse(text);
    const double x = 0.4, y = -0.7, h = 1e-5;
    auto val = [&](double a, double b) { return evaluate(f, {{"x", a}, {"y", b}}); };
    HyperDual d = at(f, x, y);
    CHECK(d.dx == doctest::Approx((val(x + h, y) - val(x - h, y)) / (2 * h)).epsilon(1e-6));
    CHECK(d.dy == doctest::Approx((val(x, y + h) - val(x, y - h)) / (2 * h)).epsilon(1e-6));
    const double k = 1e-4;
    double mixed = (val(x + k, y + k) - val(x + k, y - k) - val(x - k, y + k) + val(x - k, y - k)) / (4 * k * k);
    CHECK(d.dxy == doctest::Approx(mixed).epsilon(1e-6));
  }
  HyperDual z = HyperDual::seed_x(0.25) * HyperDual::seed_y(2.0);
  HyperDual s = sqrt(z);
  CHECK(s.dxy == doctest::Approx(0.25 / std::sqrt(0.5)));
  HyperDual p = pow(HyperDual::seed_x(1.5) + HyperDual::seed_y(0.5), 3);
  CHECK(p.dxy == doctest::Approx(6 * 2.0));
}

TEST_CASE("pointwise residuals") {
  Solution constant{[](const HyperDual&, const HyperDual&) { return HyperDual(3.0); }};
  CHECK(residual(constant, 0.2, 0.3, kUnit) == 0.0);
  Solution xy{[](const HyperDual& x, const HyperDual& y) { return x * y; }};
  CHECK(residual(xy, 1, 1, kUnit) == 4.0);
  Solution affine = solution_from_expr(parse("x - y/2"), {});
  CHECK(residual(affine, 0.3, -0.1, kUnit) == 0.0);
}

TEST_CASE("oracle solutions") {
  CHECK(oracle_mu(1, kUnit) == -0.5);
  Solution one = oracle_solution({{1.0, 1.0, 0.0}}, kUnit);
  for (auto [x, y] : {std::pair{0.0, 0.0}, std::pair{1.2, -0.4}}) CHECK(one(x, y).v == doctest::Approx(x - y / 2));
  NumericParams q{0.5, 1.5, 2.0};
  Solution two = oracle_solution({{1.0, 1.0, 0.0}, {2.5, -0.7, 0.0}}, q);
  CHECK(std::abs(residual(two, 0.3, 0.8, q)) < 1e-13);
  CHECK_THROWS_AS(oracle_solution({{0.0, 1.0, 0.0}}, q), DomainError);
  CHECK_THROWS_AS(oracle_solution({{1.0, -q.beta, 0.0}}, q), DomainError);
  auto samples = oracle_solutions(q, 5, 17);
  REQUIRE(samples.size() == 5);
  for (const auto& s : samples) {
    for (const auto& m : s.modes) CHECK(m.lambda * m.mu + q.alpha * m.lambda + q.beta * m.mu == doctest::Approx(0.0));
    CHECK(residual_grid(s.solution, {-1, 1, -1, 1, 15, 15}, q).max_residual < 1e-12);
  }
  auto again = oracle_solutions(q, 5, 17);
  CHECK(again[2].solution(0.1, 0.2).v == samples[2].solution(0.1, 0.2).v);
}

TEST_CASE("grid residuals") {
  GridReport zero = residual_grid(*constant_solution(1).solution, GridSpec{}, kUnit);
  CHECK(zero.max_residual == 0.0);
  CHECK(zero.points_evaluated == 2500);
  GridReport log = residual_grid(*case31a_solution(kUnit, 5, 0).solution, {-2, 2, -2, 2, 100, 100}, kUnit);
  CHECK(log.max_residual < 1e-12);
  CHECK(log.points_evaluated + log.points_skipped == 10000);
  Solution xy{[](const HyperDual& x, const HyperDual& y) { return x * y; }};
  GridReport bad = residual_grid(xy, {0, 1, 0, 1, 2, 2}, kUnit);
  CHECK(bad.max_residual == 4.0);
  REQUIRE(bad.has_worst);
  CHECK(bad.worst_point == std::array<double, 2>{1.0, 1.0});
  Solution nowhere{xy.u, [](double, double) { return false; }};
  CHECK_THROWS_AS(residual_grid(nowhere, GridSpec{}, kUnit), DomainError);
  // default domain rejects logarithms of non-positive numbers
  Solution logx = solution_from_expr(parse("log(x)"), {});
  CHECK_FALSE(logx.contains(-1, 0));
  CHECK(logx.contains(1, 0));
}
