#include "liethomas/reduction.hpp"

#include <cmath>

namespace lie_thomas {

namespace {

Expr as_expr(const Rational& r) { return constant(r); }


// Replaces S(chi(x, y)) and its derivatives by varsigma symbols.
Expr to_ode_symbols(const Expr& e) {
  if (e.kind() == NodeKind::Function && e.name() == "S") return varsigma_symbol(e.derivatives()[0]);
  if (e.operands().empty()) return e;
  std::vector<Expr> kids;
  for (const auto& op : e.operands()) kids.push_back(to_ode_symbols(op));
  switch (e.kind()) {
    case NodeKind::Sum: kids.push_back(constant(e.value())); return add(std::move(kids));
    case NodeKind::Product: kids.push_back(constant(e.value())); return mul(std::move(kids));
    case NodeKind::Power: return pow(kids[0], e.exponent());
    case NodeKind::Exp: return exp(kids[0]);
    case NodeKind::Log: return log(kids[0]);
    case NodeKind::Tan: return tan(kids[0]);
    case NodeKind::Arctan: return arctan(kids[0]);
    case NodeKind::Function:
      return function(e.name(), e.formals(), std::move(kids),
                      std::vector<int>(e.derivatives().begin(), e.derivatives().end()));
    default: return e;
  }
}

// u written through an unknown S of the first invariant, from varsigma = c u + h(x, y).
Expr ansatz(const InvariantPair& inv) {
  Expr cu = expand(differentiate(inv.varsigma, u_var()));
  if (depends_on(cu, "x") || depends_on(cu, "y") || depends_on(cu, "u") || is_zero(cu))
    throw ReductionError("second invariant is not affine in u");
  Expr h = inv.varsigma - cu * u_var();
  Expr s = function("S", {"chi"}, {inv.chi});
  return (s - h) / cu;
}

}  // namespace

CaseSpec CaseSpec::from(const CanonicalCase& c) {
  CaseSpec s;
  s.tag = c.tag;
  s.a1 = as_expr(c.canonical[0]);
  s.a2 = as_expr(c.canonical[1]);
  s.mirrored = c.mirrored;
  return s;
}

CaseSpec CaseSpec::symbolic(CaseTag tag, const ThomasParams& p) {
  CaseSpec s;
  s.tag = tag;
  switch (tag) {
    case CaseTag::Case2_2: s.a2 = Expr(0); break;
    case CaseTag::Case2_3: s.a1 = -p.gamma / p.beta; s.a2 = Expr(0); break;
    case CaseTag::Case2_4: s.a1 = Expr(0); s.a2 = Expr(0); break;
    case CaseTag::Case3_1a: s.a1 = Expr(1); s.a2 = p.beta / p.alpha; break;
    case CaseTag::Case3_1b: s.a1 = Expr(1); break;
    case CaseTag::Case3_2: s.a1 = Expr(0); s.a2 = Expr(1); break;
    default: break;
  }
  return s;
}

VectorField case_field(const CaseSpec& c, const ThomasParams& p) {
  const Expr x = x_var(), y = y_var();
  switch (c.tag) {
    case CaseTag::Case1: return {c.a1 - p.gamma * x, c.a2 + p.gamma * y, p.beta * x - p.alpha * y};
    case CaseTag::Case2_1a:
    case CaseTag::Case2_1b:
    case CaseTag::Case2_2:
    case CaseTag::Case2_3: return {c.a1, c.a2, Expr(1)};
    case CaseTag::Case2_4: return {Expr(0), Expr(0), Expr(1)};
    case CaseTag::Case3_1a:
    case CaseTag::Case3_1b: return {Expr(1), c.a2, Expr(0)};
    case CaseTag::Case3_2: return c.mirrored ? VectorField{Expr(1), Expr(0), Expr(0)} : VectorField{Expr(0), Expr(1), Expr(0)};
    case CaseTag::Zero: break;
  }
  throw ReductionError("the zero vector generates no subgroup");
}

InvariantPair invariants(const CaseSpec& c, const ThomasParams& p) {
  const Expr x = x_var(), y = y_var(), u = u_var();
  const Expr &al = p.alpha, &be = p.beta, &ga = p.gamma;
  switch (c.tag) {
    case CaseTag::Case1: {
      Expr lx = c.a1 - ga * x;
      Expr chi = lx * (c.a2 + ga * y);
      Expr K = be * c.a1 + al * c.a2;
      return {chi, u + (be / ga) * x + (K / pow(ga, 2)) * log(lx) + al * chi / (pow(ga, 2) * lx),
              "x != a1/gamma and chi != 0; log(a1 - gamma x) is read as log|a1 - gamma x|"};
    }
    case CaseTag::Case2_1a:
    case CaseTag::Case2_1b:
      return {c.a2 * x - c.a1 * y, u - y / c.a2, "all (x, y)"};
    case CaseTag::Case2_2:
      if (c.mirrored) return {x, y - c.a2 * u, "all (x, y)"};
      return {y, x - c.a1 * u, "all (x, y)"};
    case CaseTag::Case2_3:
      if (c.mirrored) return {x, al * y + ga * u, "all (x, y)"};
      return {y, be * x + ga * u, "all (x, y)"};
    case CaseTag::Case2_4:
      return {y, x, "invariants x, y only: no reduction"};
    case CaseTag::Case3_1a:
    case CaseTag::Case3_1b:
      return {x - y / c.a2, u, "all (x, y)"};
    case CaseTag::Case3_2:
      return {c.mirrored ? y : x, u, "all (x, y)"};
    case CaseTag::Zero: break;
  }
  throw ReductionError("the zero vector has no invariants");
}

std::string to_string(OdeKind kind) {
  switch (kind) {
    case OdeKind::Fuchs: return "Fuchs";
    case OdeKind::Riccati: return "Riccati";
    case OdeKind::Bernoulli: return "Bernoulli";
    case OdeKind::Linear: return "linear-first-order";
    case OdeKind::Algebraic: return "algebraic";
  }
  return "?";
}

Expr chi_symbol() { return variable("chi"); }

Expr varsigma_symbol(int order) {
  static const char* names[] = {"varsigma", "varsigma_chi", "varsigma_chichi"};
  if (order < 0 || order > 2) throw ReductionError("reduced equations are at most second order");
  return variable(names[order]);
}

Expr theta_symbol(int order) {
  if (order < 0 || order > 1) throw ReductionError("theta equations are first order");
  return variable(order == 0 ? "theta" : "theta_chi");
}

ReducedODE reduced_ode(const CaseSpec& c, const ThomasParams& p) {
  const Expr &al = p.alpha, &be = p.beta, &ga = p.gamma;
  const Expr chi = chi_symbol(), s1 = varsigma_symbol(1), s2 = varsigma_symbol(2);
  const Expr th = theta_symbol(0), th1 = theta_symbol(1);
  ReducedODE ode;
  switch (c.tag) {
    case CaseTag::Case1: {
      Expr K = be * c.a1 + al * c.a2;
      ode.order = 2;
      ode.kind = OdeKind::Fuchs;
      ode.equation = pow(ga, 2) * chi * s2 + pow(ga, 3) * chi * pow(s1, 2) + ga * (ga - K) * s1 + al * be / ga;
      Expr e = (ga - K) / ga;
      ode.theta_equation = th1 + ga * pow(th, 2) + e * th / chi + al * be / (pow(ga, 3) * chi);
      ode.fuchs_e = e;
      ode.fuchs_m = al * be / pow(ga, 2);
      ode.note = "theta = varsigma_chi is Riccati; y = exp(int gamma theta) gives chi y'' + e y' + m y = 0";
      return ode;
    }
    case CaseTag::Case2_1a:
    case CaseTag::Case2_1b: {
      Expr B = al * c.a2 - be * c.a1 + ga;
      Expr q = c.a1 * c.a2;
      ode.order = 2;
      ode.kind = OdeKind::Riccati;
      ode.equation = -q * s2 + B * s1 - q * ga * pow(s1, 2) + be / c.a2;
      ode.theta_equation = -q * th1 + B * th - q * ga * pow(th, 2) + be / c.a2;
      return ode;
    }
    case CaseTag::Case2_2:
      ode.order = 1;
      ode.kind = OdeKind::Linear;
      ode.equation = c.mirrored ? (al * c.a2 + ga) * s1 - be * c.a2 : (be * c.a1 + ga) * s1 - c.a1 * al;
      return ode;
    case CaseTag::Case2_3:
      ode.order = 0;
      ode.kind = OdeKind::Algebraic;
      ode.equation = al * be;
      ode.note = "no solution: alpha*beta = 0 required";
      return ode;
    case CaseTag::Case3_1a:
    case CaseTag::Case3_1b: {
      ode.order = 2;
      ode.kind = OdeKind::Bernoulli;
      Expr s = be - c.a2 * al;
      ode.equation = s2 + s * s1 + ga * pow(s1, 2);
      ode.theta_equation = th1 + s * th + ga * pow(th, 2);
      return ode;
    }
    case CaseTag::Case3_2:
      ode.order = 1;
      ode.kind = OdeKind::Linear;
      ode.equation = (c.mirrored ? be : al) * s1;
      ode.note = "u is constant";
      return ode;
    case CaseTag::Case2_4:
      throw ReductionError("Case 2.4: invariants x, y leave no reduction");
    case CaseTag::Zero: break;
  }
  throw ReductionError("the zero vector has no reduction");
}

bool annihilates(const CaseSpec& c, const ThomasParams& p) {
  VectorField v = case_field(c, p);
  InvariantPair inv = invariants(c, p);
  return is_zero(apply(v, inv.chi)) && is_zero(apply(v, inv.varsigma));
}

std::array<Expr, 3> chain_rule_derivatives(const CaseSpec& c, const ThomasParams& p) {
  Expr u = ansatz(invariants(c, p));
  Expr ux = differentiate(u, x_var());
  Expr uy = differentiate(u, y_var());
  Expr uxy = differentiate(ux, y_var());
  return {to_ode_symbols(ux), to_ode_symbols(uy), to_ode_symbols(uxy)};
}

ReductionCheck verify_reduction(const CaseSpec& c, const ThomasParams& p) {
  ReductionCheck out;
  InvariantPair inv = invariants(c, p);
  ReducedODE ode = reduced_ode(c, p);
  auto [ux, uy, uxy] = chain_rule_derivatives(c, p);
  out.substituted = expand(uxy + p.alpha * ux + p.beta * uy + p.gamma * ux * uy);
  Expr target = substitute(ode.equation, {{"chi", inv.chi}});

  Expr lead;
  for (int k = 2; k >= 1 && lead.is_zero(); --k) {
    Expr sym = varsigma_symbol(k);
    Expr ct = coefficient_of(target, sym, k == 2 ? 1 : 1);
    Expr cs = coefficient_of(out.substituted, sym, 1);
    if (!is_zero(ct)) {
      if (k == 1) {
        // pick the highest power of varsigma_chi present in the target
        Expr c2 = coefficient_of(target, sym, 2);
        if (!is_zero(c2)) {
          ct = c2;
          cs = coefficient_of(out.substituted, sym, 2);
        }
      }
      lead = cs / ct;
    }
  }
  if (lead.is_zero()) lead = out.substituted / target;
  out.ratio = expand(lead);
  for (int k = 0; k <= 2; ++k) {
    if (depends_on(out.ratio, varsigma_symbol(k).name())) {
      out.message = "ratio depends on the unknown: " + out.ratio.str();
      return out;
    }
  }
  if (is_zero(out.ratio)) {
    out.message = "substituted operator has no term matching the reduced equation";
    return out;
  }
  if (ode.order == 0 && (!is_zero(differentiate(out.ratio, x_var())) || !is_zero(differentiate(out.ratio, y_var())))) {
    out.message = "algebraic obstruction is not constant";
    return out;
  }
  Expr diff = out.substituted - out.ratio * target;
  out.ok = is_zero(diff);
  if (!out.ok) out.message = "mismatch: substituted " + out.substituted.str() + " vs ratio*ODE " + expand(out.ratio * target).str();
  return out;
}

bool functionally_independent(const CaseSpec& c, const ThomasParams& p, double x, double y, double u) {
  InvariantPair inv = invariants(c, p);
  NumericBindings b = p.numeric_bindings();
  b["x"] = x;
  b["y"] = y;
  b["u"] = u;
  if (c.a1.is_constant()) b["a1"] = c.a1.value().to_double();
  if (c.a2.is_constant()) b["a2"] = c.a2.value().to_double();
  std::array<std::array<double, 3>, 2> jac{};
  const Expr vars[3] = {x_var(), y_var(), u_var()};
  for (int j = 0; j < 3; ++j) {
    jac[0][j] = evaluate(differentiate(inv.chi, vars[j]), b);
    jac[1][j] = evaluate(differentiate(inv.varsigma, vars[j]), b);
  }
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) best = std::max(best, std::abs(jac[0][i] * jac[1][j] - jac[0][j] * jac[1][i]));
  }
  return best > 1e-12;
}

}  // namespace lie_thomas
