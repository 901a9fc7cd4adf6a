#include "liethomas/solution_families.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <limits>

namespace lie_thomas {

namespace {

constexpr double kQuadTol = 1e-11;
constexpr double kMargin = 0.05;

template <class F>
double integrate(F f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a);
  return gauss_kronrod<double, 31>::integrate(f, a, b, 12, kQuadTol);
}

NumericBindings bindings_of(const NumericParams& p, std::map<std::string, double> extra) {
  extra["alpha"] = p.alpha;
  extra["beta"] = p.beta;
  extra["gamma"] = p.gamma;
  return extra;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw FamilyError(message);
}

}  // namespace

FuchsSeries FuchsSeries::build(double e, double m, int n_max) {
  if (e <= 0 && std::floor(e) == e) throw FamilyError("Fuchs series needs e outside {0, -1, -2, ...}");
  FuchsSeries s;
  s.e = e;
  s.m = m;
  s.coefficients.reserve(n_max + 1);
  s.coefficients.push_back(1.0);
  for (int n = 1; n <= n_max; ++n) s.coefficients.push_back(-m * s.coefficients.back() / (n * (n - 1 + e)));
  s.tail_bound = std::abs(s.coefficients.back());
  return s;
}

FuchsSeries::Value FuchsSeries::evaluate(double chi) const {
  Value v;
  double p0 = 1.0, p1 = 0.0, p2 = 0.0;  // chi^n, chi^(n-1), chi^(n-2)
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    double term = coefficients[n] * p0;
    v.y += term;
    v.dy += n * coefficients[n] * p1;
    v.d2y += n * (n - 1.0) * coefficients[n] * p2;
    p2 = n == 0 ? 0.0 : (n == 1 ? 1.0 : p2 * chi);
    p1 = n == 0 ? 1.0 : p1 * chi;
    p0 *= chi;
    bool decaying = n > 2 && 4.0 * std::abs(m * chi) < static_cast<double>(n * n);
    if (decaying && std::abs(term) <= 1e-17 * std::max(std::abs(v.y), 1e-300)) return v;
  }
  throw FamilyError("Fuchs series truncated before the tail bound at chi = " + std::to_string(chi));
}

double fuchs_coefficient_closed(double e, double m, int n) {
  return std::pow(-m, n) / (boost::math::factorial<double>(n) * boost::math::rising_factorial(e, n));
}

double fuchs_solution(double e, double m, double chi, int n_max) {
  return FuchsSeries::build(e, m, n_max).evaluate(chi).y;
}

// ---- Case 1 ----

Case1Solver::Case1Solver(const NumericParams& p, double a1, double a2, double c0)
    : p_(p), a1_(a1), a2_(a2), c0_(c0) {
  require(p.gamma != 0, "gamma must be nonzero");
  require(c0 != 0, "C0 must be nonzero");
  double K = p.beta * a1 + p.alpha * a2;
  e_ = (p.gamma - K) / p.gamma;
  m_ = p.alpha * p.beta / (p.gamma * p.gamma);
  series_ = FuchsSeries::build(e_, m_);
  first_zero_ = find_zero(1.0);
  last_zero_ = -find_zero(-1.0);
}

double Case1Solver::find_zero(double direction) const {
  for (int k = 1; k <= 5000; ++k) {
    double t = direction * 0.01 * k;
    if (series_.evaluate(t).y > 0) continue;
    double lo = t - direction * 0.01, hi = t;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      (series_.evaluate(mid).y > 0 ? lo : hi) = mid;
    }
    return std::abs(0.5 * (lo + hi));
  }
  return std::numeric_limits<double>::infinity();
}

Case1Parts Case1Solver::parts(double chi) const {
  const double g = p_.gamma;
  auto integrand = [this](double t) {
    double yp = series_.evaluate(t).y;
    return std::pow(std::abs(t), -e_) / (yp * yp);
  };
  Case1Parts out;
  out.integral = integrate(integrand, base_point(chi), chi);
  auto y = series_.evaluate(chi);
  out.zp = y.dy / (g * y.y);
  double dzp = (y.d2y * y.y - y.dy * y.dy) / (g * y.y * y.y);
  double f = g * y.y * y.y * std::pow(std::abs(chi), e_) * (out.integral + c0_);
  double df = (2 * g * out.zp + e_ / chi) * f + g;
  out.theta = out.zp + 1.0 / f;
  out.dtheta = dzp - df / (f * f);
  return out;
}

double Case1Solver::varsigma(double chi) const {
  return integrate([this](double t) { return parts(t).theta; }, base_point(chi), chi);
}

double Case1Solver::varsigma_log(double chi) const {
  double y0 = series_.evaluate(base_point(chi)).y * c0_;
  double y = series_.evaluate(chi).y * (parts(chi).integral + c0_);
  return std::log(std::abs(y / y0)) / p_.gamma;
}

bool Case1Solver::admissible(double chi) const {
  if (std::abs(chi) < kMargin) return false;
  if (chi > 0 && chi > first_zero_ - kMargin) return false;
  if (chi < 0 && chi < last_zero_ + kMargin) return false;
  if (std::abs(base_point(chi)) > (chi > 0 ? first_zero_ : -last_zero_)) return false;
  double shifted = parts(chi).integral + c0_;
  return std::signbit(shifted) == std::signbit(c0_) && std::abs(shifted) > kMargin;
}

SolutionFamily case1_solution(const NumericParams& p, double a1, double a2, double c0, double c) {
  auto solver = std::make_shared<Case1Solver>(p, a1, a2, c0);
  const double K = p.beta * a1 + p.alpha * a2;
  SolutionFamily fam;
  fam.tag = CaseTag::Case1;
  fam.name = "Case1";
  fam.constants = {{"a1", a1}, {"a2", a2}, {"C0", c0}, {"c", c}};
  fam.note = "Fuchs series y_p, reduction of order for the Riccati solution, quadrature for varsigma";
  Solution s;
  s.label = "Case1";
  s.u = [solver, p, a1, a2, K, c](const HyperDual& x, const HyperDual& y) {
    HyperDual lx = a1 - p.gamma * x;
    HyperDual ly = a2 + p.gamma * y;
    HyperDual chi = lx * ly;
    auto parts = solver->parts(chi.v);
    HyperDual sig = chain(chi, solver->varsigma(chi.v), parts.theta, parts.dtheta);
    HyperDual u = sig - (p.beta / p.gamma) * x - (p.alpha / (p.gamma * p.gamma)) * ly + c;
    if (K != 0) u = u - (K / (p.gamma * p.gamma)) * log(abs(lx));
    return u;
  };
  s.domain = [solver, p, a1, a2, K](double x, double y) {
    double lx = a1 - p.gamma * x;
    if (K != 0 && std::abs(lx) < kMargin) return false;
    return solver->admissible(lx * (a2 + p.gamma * y));
  };
  fam.solution = s;
  return fam;
}

// ---- Case 2.1 ----

Case21aConstants case21a_constants(const NumericParams& p, double a1, double a2, int root) {
  require(a1 != 0 && a2 != 0, "Case 2.1 needs a1 a2 != 0");
  require(root == 1 || root == -1, "root must be +1 or -1");
  const double q = a1 * a2;
  const double B = p.alpha * a2 - p.beta * a1 + p.gamma;
  Case21aConstants k;
  k.discriminant = B * B + 4 * p.gamma * p.beta * a1;
  require(k.discriminant >= 0, "negative discriminant: use the tangent family");
  k.theta0 = (B + root * std::sqrt(k.discriminant)) / (2 * q * p.gamma);
  k.C = (2 * q * p.gamma * k.theta0 - B) / q;
  return k;
}

SolutionFamily case21a_solution(const NumericParams& p, double a1, double a2, int root, double A, double c) {
  auto k = case21a_constants(p, a1, a2, root);
  require(k.C != 0, "C = 0: degenerate double root");
  const Expr x = x_var(), y = y_var();
  const Expr g = parameter("gamma"), C = parameter("C");
  Expr chi = parameter("a2") * x - parameter("a1") * y;
  Expr u = log(parameter("A") - (g / C) * exp(-C * chi)) / g + parameter("theta0") * chi + y / parameter("a2") +
           parameter("c");
  SolutionFamily fam;
  fam.tag = CaseTag::Case2_1a;
  fam.name = "Case2_1a";
  fam.constants = {{"a1", a1}, {"a2", a2}, {"root", root}, {"A", A}, {"c", c}};
  fam.closed_form = u;
  fam.note = "constant Riccati root theta0 plus Bernoulli correction";
  fam.solution = solution_from_expr(
      u, bindings_of(p, {{"a1", a1}, {"a2", a2}, {"A", A}, {"c", c}, {"theta0", k.theta0}, {"C", k.C}}), fam.name);
  return fam;
}

Case21bConstants case21b_constants(const NumericParams& p, double a1, double a2) {
  require(a1 != 0 && a2 != 0, "Case 2.1 needs a1 a2 != 0");
  Case21bConstants k;
  k.A1 = (p.alpha * a2 - p.beta * a1 + p.gamma) / (a1 * a2);
  k.A2 = -p.gamma;
  k.A3 = p.beta / (a1 * a2 * a2);
  k.Xi = (4 * k.A2 * k.A3 - k.A1 * k.A1) / (4 * k.A2 * k.A2);
  return k;
}

SolutionFamily case21b_solution(const NumericParams& p, double a1, double a2, double A0, double c) {
  auto k = case21b_constants(p, a1, a2);
  require(k.Xi > 0, "Xi <= 0: use the exponential family");
  const Expr x = x_var(), y = y_var();
  const Expr A2 = parameter("A2");
  Expr chi = parameter("a2") * x - parameter("a1") * y;
  Expr w = A2 * parameter("sqrtXi") * chi + parameter("A0");
  // -(1/A2) log|cos w| written through tan
  Expr u = log(1 + pow(tan(w), 2)) / (2 * A2) - parameter("A1") / (2 * A2) * chi + y / parameter("a2") +
           parameter("c");
  SolutionFamily fam;
  fam.tag = CaseTag::Case2_1b;
  fam.name = "Case2_1b";
  fam.constants = {{"a1", a1}, {"a2", a2}, {"A0", A0}, {"c", c}};
  fam.closed_form = u;
  fam.note = "tangent Riccati solution; integral of tan taken as -log|cos|";
  Solution s = solution_from_expr(u,
                                  bindings_of(p, {{"a1", a1}, {"a2", a2}, {"A0", A0}, {"c", c}, {"A1", k.A1},
                                                  {"A2", k.A2}, {"sqrtXi", std::sqrt(k.Xi)}}),
                                  fam.name);
  const double rate = k.A2 * std::sqrt(k.Xi);
  s.domain = [rate, a1, a2, A0](double x, double y) {
    return std::abs(std::cos(rate * (a2 * x - a1 * y) + A0)) > kMargin;
  };
  fam.solution = s;
  return fam;
}

// ---- Cases 2.2, 3.1, constants ----

SolutionFamily case22_solution(const NumericParams& p, double a, double c, bool mirrored) {
  require(a != 0, "Case 2.2 needs a nonzero coordinate");
  const Expr x = x_var(), y = y_var();
  const Expr al = parameter("alpha"), be = parameter("beta"), g = parameter("gamma");
  SolutionFamily fam;
  fam.tag = CaseTag::Case2_2;
  fam.name = "Case2_2";
  fam.note = "affine solution";
  Expr u;
  if (mirrored) {
    require(p.alpha * a + p.gamma != 0, "a2 = -gamma/alpha belongs to Case 2.3");
    u = y / parameter("a2") - be * x / (al * parameter("a2") + g) + parameter("c");
    fam.constants = {{"a2", a}, {"c", c}};
  } else {
    require(p.beta * a + p.gamma != 0, "a1 = -gamma/beta belongs to Case 2.3");
    u = x / parameter("a1") - al * y / (be * parameter("a1") + g) + parameter("c");
    fam.constants = {{"a1", a}, {"c", c}};
  }
  fam.closed_form = u;
  fam.solution = solution_from_expr(u, bindings_of(p, fam.constants), fam.name);
  return fam;
}

SolutionFamily case31a_solution(const NumericParams& p, double k0, double c) {
  require(p.alpha != 0, "Case 3.1a needs alpha != 0 (a2 = beta/alpha)");
  const double a2 = p.beta / p.alpha;
  require(a2 != 0, "Case 3.1a needs beta != 0");
  const Expr g = parameter("gamma");
  Expr u = log(g * (x_var() - y_var() / parameter("a2")) + parameter("k0")) / g + parameter("c");
  SolutionFamily fam;
  fam.tag = CaseTag::Case3_1a;
  fam.name = "Case3_1a";
  fam.constants = {{"k0", k0}, {"c", c}};
  fam.closed_form = u;
  fam.note = "logarithmic travelling wave, a2 = beta/alpha";
  fam.solution = solution_from_expr(u, bindings_of(p, {{"a2", a2}, {"k0", k0}, {"c", c}}), fam.name);
  return fam;
}

SolutionFamily case31b_solution(const NumericParams& p, double a2, double k, double c) {
  require(a2 != 0, "Case 3.1 needs a2 != 0");
  const double s = p.beta - a2 * p.alpha;
  require(s != 0, "beta - a2 alpha = 0 is Case 3.1a");
  const Expr g = parameter("gamma"), sv = parameter("s");
  Expr chi = x_var() - y_var() / parameter("a2");
  Expr u = -log(1 + g / (parameter("k") * sv * exp(sv * chi) - g)) / g + parameter("c");
  SolutionFamily fam;
  fam.tag = CaseTag::Case3_1b;
  fam.name = "Case3_1b";
  fam.constants = {{"a2", a2}, {"k", k}, {"c", c}};
  fam.closed_form = u;
  fam.note = "Bernoulli solution, s = beta - a2 alpha";
  fam.solution = solution_from_expr(u, bindings_of(p, {{"a2", a2}, {"k", k}, {"c", c}, {"s", s}}), fam.name);
  return fam;
}

SolutionFamily constant_solution(double c) {
  SolutionFamily fam;
  fam.tag = CaseTag::Case3_2;
  fam.name = "constant";
  fam.constants = {{"c", c}};
  fam.closed_form = parameter("c");
  fam.note = "the solution is a constant";
  Solution s;
  s.label = fam.name;
  s.u = [c](const HyperDual&, const HyperDual&) { return HyperDual(c); };
  fam.solution = s;
  return fam;
}

std::vector<SolutionFamily> trivial_solutions() {
  std::vector<SolutionFamily> out;
  out.push_back(constant_solution(0.0));
  SolutionFamily c23;
  c23.tag = CaseTag::Case2_3;
  c23.name = "Case2_3";
  c23.note = "no solution: alpha*beta = 0 required";
  out.push_back(c23);
  SolutionFamily c24;
  c24.tag = CaseTag::Case2_4;
  c24.name = "Case2_4";
  c24.note = "no solution: invariants (x, y) leave no reduction";
  out.push_back(c24);
  return out;
}

std::map<std::string, double> default_constants(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return {{"a1", 0}, {"a2", 0}, {"C0", 5}, {"c", 0}};
    case CaseTag::Case2_1a: return {{"a1", 1}, {"a2", 2}, {"root", -1}, {"A", 1}, {"c", 0}};
    case CaseTag::Case2_1b: return {{"a1", -1}, {"a2", -1}, {"A0", 0}, {"c", 0}};
    case CaseTag::Case2_2: return {{"a1", 1}, {"c", 0}};
    case CaseTag::Case3_1a: return {{"k0", 5}, {"c", 0}};
    case CaseTag::Case3_1b: return {{"a2", 2}, {"k", 1}, {"c", 0}};
    case CaseTag::Case3_2: return {{"c", 0}};
    default: return {};
  }
}

SolutionFamily make_family(CaseTag tag, const NumericParams& p, const std::map<std::string, double>& constants) {
  auto k = default_constants(tag);
  for (const auto& [name, value] : constants) {
    bool known = k.count(name) > 0 || (tag == CaseTag::Case2_2 && name == "a2");
    if (!known) throw FamilyError("unknown constant '" + name + "' for " + to_string(tag));
    k[name] = value;
  }
  switch (tag) {
    case CaseTag::Case1: return case1_solution(p, k["a1"], k["a2"], k["C0"], k["c"]);
    case CaseTag::Case2_1a:
      return case21a_solution(p, k["a1"], k["a2"], static_cast<int>(k["root"]), k["A"], k["c"]);
    case CaseTag::Case2_1b: return case21b_solution(p, k["a1"], k["a2"], k["A0"], k["c"]);
    case CaseTag::Case2_2:
      if (constants.count("a2") && !constants.count("a1")) return case22_solution(p, k["a2"], k["c"], true);
      return case22_solution(p, k["a1"], k["c"]);
    case CaseTag::Case3_1a: return case31a_solution(p, k["k0"], k["c"]);
    case CaseTag::Case3_1b: return case31b_solution(p, k["a2"], k["k"], k["c"]);
    case CaseTag::Case3_2: return constant_solution(k["c"]);
    case CaseTag::Case2_3: return trivial_solutions()[1];
    case CaseTag::Case2_4: return trivial_solutions()[2];
    case CaseTag::Zero: break;
  }
  throw FamilyError("no family for the zero vector");
}

}  // namespace lie_thomas
