#include "liethomas/lie_algebra.hpp"

#include <cmath>

namespace lie_thomas {

namespace {

bool is_constant_in_xyu(const Expr& e) {
  for (const Expr& v : {x_var(), y_var(), u_var()}) {
    if (!is_zero(differentiate(e, v))) return false;
  }
  return true;
}

std::string render(const AlgebraElement& v, bool latex) {
  std::vector<Expr> terms;
  std::string out;
  auto append = [&](const Expr& c, const std::string& name) {
    Expr ce = expand(c);
    if (ce.is_zero()) return;
    std::string cs;
    if (ce.is_one()) {
      cs = "";
    } else if (ce.is_constant() && ce.value() == Rational(-1)) {
      cs = "-";
    } else if (ce.kind() == NodeKind::Sum) {
      cs = latex ? "\\left(" + ce.latex() + "\\right) " : "(" + ce.str() + ")*";
    } else {
      cs = (latex ? ce.latex() + " " : ce.str() + "*");
    }
    std::string term = cs + name;
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  };
  for (int i = 0; i < 4; ++i) append(v.a[i], latex ? "v_{" + std::to_string(i + 1) + "}" : "v" + std::to_string(i + 1));
  if (v.g && !is_zero(*v.g)) {
    std::string name = latex ? "v_{" + expand(*v.g).latex() + "}" : "v[" + expand(*v.g).str() + "]";
    if (out.empty()) out = name;
    else out += " + " + name;
  }
  return out.empty() ? "0" : out;
}

std::array<Expr, 4> finite_coords(const AlgebraElement& v) {
  if (v.g && !is_zero(*v.g)) throw SymbolicError("adjoint action is only tabulated on span{v1..v4}");
  return v.a;
}

}  // namespace

AlgebraElement AlgebraElement::basis(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("basis index must be 1..4");
  AlgebraElement v;
  v.a[static_cast<std::size_t>(i - 1)] = Expr(1);
  return v;
}

AlgebraElement AlgebraElement::from_g(const Expr& g) {
  AlgebraElement v;
  v.g = g;
  return v;
}

AlgebraElement AlgebraElement::coords(const Expr& a1, const Expr& a2, const Expr& a3, const Expr& a4) {
  AlgebraElement v;
  v.a = {a1, a2, a3, a4};
  return v;
}

std::string AlgebraElement::str() const { return render(*this, false); }
std::string AlgebraElement::latex() const { return render(*this, true); }

AlgebraElement operator+(const AlgebraElement& v, const AlgebraElement& w) {
  AlgebraElement r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = v.a[i] + w.a[i];
  if (v.g || w.g) r.g = v.g.value_or(Expr()) + w.g.value_or(Expr());
  return r;
}

AlgebraElement operator-(const AlgebraElement& v, const AlgebraElement& w) { return v + Expr(-1) * w; }

AlgebraElement operator*(const Expr& s, const AlgebraElement& v) {
  AlgebraElement r;
  for (std::size_t i = 0; i < 4; ++i) r.a[i] = s * v.a[i];
  if (v.g) r.g = s * *v.g;
  return r;
}

bool equivalent(const AlgebraElement& v, const AlgebraElement& w) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!equivalent(v.a[i], w.a[i])) return false;
  }
  return equivalent(v.g.value_or(Expr()), w.g.value_or(Expr()));
}

VectorField to_field(const AlgebraElement& v, const ThomasParams& p) {
  const Expr x = x_var(), y = y_var(), u = u_var();
  VectorField f{v.a[0] - v.a[3] * p.gamma * x, v.a[1] + v.a[3] * p.gamma * y,
                v.a[2] + v.a[3] * (p.beta * x - p.alpha * y)};
  if (v.g) f.phi = f.phi - (*v.g / p.gamma) * exp(-p.gamma * u);
  return f;
}

AlgebraElement from_field(const VectorField& vf, const ThomasParams& p) {
  const Expr x = x_var(), y = y_var(), u = u_var();
  AlgebraElement r;
  Expr a4 = expand(-differentiate(vf.xi, x) / p.gamma);
  Expr a1 = expand(vf.xi + a4 * p.gamma * x);
  Expr a2 = expand(vf.eta - a4 * p.gamma * y);
  Expr rest = vf.phi - a4 * (p.beta * x - p.alpha * y);
  Expr phi_g = expand(-differentiate(rest, u) / p.gamma);
  Expr a3 = expand(rest - phi_g);
  Expr g = expand(-p.gamma * phi_g * exp(p.gamma * u));
  if (!is_constant_in_xyu(a4) || !is_constant_in_xyu(a1) || !is_constant_in_xyu(a2) || !is_constant_in_xyu(a3) ||
      !is_zero(differentiate(g, u)))
    throw SymbolicError("vector field is not in the symmetry algebra");
  r.a = {a1, a2, a3, a4};
  if (!is_zero(g)) r.g = g;
  return r;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  return {apply(v, w.xi) - apply(w, v.xi), apply(v, w.eta) - apply(w, v.eta), apply(v, w.phi) - apply(w, v.phi)};
}

AlgebraElement commutator(const AlgebraElement& v, const AlgebraElement& w, const ThomasParams& p) {
  return from_field(bracket(to_field(v, p), to_field(w, p)), p);
}

Expr psi_of(const Expr& g, const ThomasParams& p) {
  const Expr x = x_var(), y = y_var();
  return -p.gamma * x * differentiate(g, x) + p.gamma * y * differentiate(g, y) -
         p.gamma * (p.beta * x - p.alpha * y) * g;
}

AlgebraElement published_commutator(int i, int j, const Expr& g, const ThomasParams& p) {
  using E = AlgebraElement;
  const Expr gx = differentiate(g, x_var()), gy = differentiate(g, y_var());
  const Expr &al = p.alpha, &be = p.beta, &ga = p.gamma;
  const E zero;
  switch (i * 10 + j) {
    case 14: return E::coords(-ga, 0, be, 0);
    case 15: return E::from_g(gx);
    case 24: return E::coords(0, ga, -al, 0);
    case 25: return E::from_g(gy);
    case 35: return E::from_g(-ga * g);
    case 41: return E::coords(ga, 0, -be, 0);
    case 42: return E::coords(0, -ga, al, 0);
    case 45: return E::from_g(psi_of(g, p));
    case 51: return E::from_g(-gx);
    case 52: return E::from_g(-gy);
    case 53: return E::from_g(ga * g);
    case 54: return E::from_g(psi_of(g, p));
    default:
      if (i < 1 || i > 5 || j < 1 || j > 5) throw std::out_of_range("commutator table index");
      return zero;
  }
}

AlgebraElement adjoint(int i, const Expr& eps, const AlgebraElement& w, const ThomasParams& p) {
  auto [a1, a2, a3, a4] = finite_coords(w);
  const Expr &al = p.alpha, &be = p.beta, &ga = p.gamma;
  switch (i) {
    case 1: return AlgebraElement::coords(a1 + eps * ga * a4, a2, a3 - eps * be * a4, a4);
    case 2: return AlgebraElement::coords(a1, a2 - eps * ga * a4, a3 + eps * al * a4, a4);
    case 3: return AlgebraElement::coords(a1, a2, a3, a4);
    case 4: {
      Expr em = exp(-ga * eps), ep = exp(ga * eps);
      return AlgebraElement::coords(a1 * em, a2 * ep, a3 + a1 * (be / ga) * (1 - em) - a2 * (al / ga) * (ep - 1), a4);
    }
    default:
      throw std::out_of_range("adjoint generator must be 1..4");
  }
}

AlgebraElement published_adjoint(int i, int j, const Expr& eps, const ThomasParams& p) {
  using E = AlgebraElement;
  const Expr &al = p.alpha, &be = p.beta, &ga = p.gamma;
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::out_of_range("adjoint table index");
  if (j == 4 && i == 1) return E::coords(eps * ga, 0, -eps * be, 1);
  if (j == 4 && i == 2) return E::coords(0, -eps * ga, eps * al, 1);
  if (i == 4 && j == 1) return E::coords(exp(-ga * eps), 0, (be / ga) * (1 - exp(-ga * eps)), 0);
  if (i == 4 && j == 2) return E::coords(0, exp(ga * eps), -(al / ga) * (exp(-ga * eps) - 1), 0);
  return E::basis(j);
}

LieSeriesResult adjoint_lie_series(int i, const Expr& eps, const AlgebraElement& w, const ThomasParams& p,
                                   int order) {
  finite_coords(w);
  const AlgebraElement vi = AlgebraElement::basis(i);
  // series[n][k]: coefficient of eps^n in coordinate k
  std::vector<std::array<Expr, 4>> series;
  AlgebraElement term = w;
  LieSeriesResult result;
  Rational factorial(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      term = commutator(vi, term, p);
      factorial *= Rational(n);
    }
    std::array<Expr, 4> c;
    bool all_zero = true;
    for (std::size_t k = 0; k < 4; ++k) {
      c[k] = expand(constant(Rational(n % 2 == 0 ? 1 : -1) / factorial) * term.a[k]);
      all_zero = all_zero && is_zero(c[k]);
    }
    if (all_zero && n > 0) {
      result.terminated = true;
      break;
    }
    series.push_back(c);
  }
  result.terms_used = static_cast<int>(series.size());
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<Expr> terms;
    bool polynomial = result.terminated;
    if (!polynomial) {
      polynomial = true;
      for (std::size_t n = 1; n < series.size(); ++n) polynomial = polynomial && is_zero(series[n][k]);
    }
    if (polynomial) {
      for (std::size_t n = 0; n < series.size(); ++n) terms.push_back(series[n][k] * pow(eps, static_cast<int>(n)));
      result.closed_form.a[k] = expand(add(std::move(terms)));
      continue;
    }
    bool matched = false;
    for (const Expr& r : {p.gamma, -p.gamma}) {
      Expr K = series[1][k] / r;
      Rational nf(1);
      bool ok = true;
      for (std::size_t n = 1; n < series.size() && ok; ++n) {
        nf *= Rational(static_cast<std::int64_t>(n));
        ok = is_zero(series[n][k] * constant(nf) - K * pow(r, static_cast<int>(n)));
      }
      if (ok) {
        result.closed_form.a[k] = series[0][k] + K * (exp(r * eps) - 1);
        matched = true;
        break;
      }
    }
    if (!matched) throw SymbolicError("Lie series coordinate does not match an exponential pattern");
  }
  return result;
}

std::array<double, 4> adjoint_series_numeric(int i, double eps, const std::array<double, 4>& w,
                                             const ThomasParams& p, int terms) {
  if (!p.is_numeric()) throw SymbolicError("numeric Lie series needs numeric parameters");
  // ad(v_i) as a matrix from the brackets with the basis
  std::array<std::array<double, 4>, 4> m{};
  const AlgebraElement vi = AlgebraElement::basis(i);
  for (int j = 1; j <= 4; ++j) {
    AlgebraElement c = commutator(vi, AlgebraElement::basis(j), p);
    for (std::size_t k = 0; k < 4; ++k) m[k][static_cast<std::size_t>(j - 1)] = expand(c.a[k]).value().to_double();
  }
  std::array<double, 4> sum = w, term = w;
  for (int n = 1; n < terms; ++n) {
    std::array<double, 4> next{};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) next[r] += m[r][c] * term[c];
    }
    for (std::size_t r = 0; r < 4; ++r) {
      term[r] = -eps / n * next[r];
      sum[r] += term[r];
    }
  }
  return sum;
}

Point group_action(int i, double eps, const Point& pt, const NumericParams& p) {
  auto [x, y, u] = pt;
  switch (i) {
    case 1: return {x + eps, y, u};
    case 2: return {x, y + eps, u};
    case 3: return {x, y, u + eps};
    case 4: {
      const double em = std::exp(-p.gamma * eps), ep = std::exp(p.gamma * eps);
      return {x * em, y * ep, p.beta / p.gamma * x * (1 - em) + p.alpha / p.gamma * y * (1 - ep) + u};
    }
    default:
      throw std::out_of_range("group generator must be 1..4");
  }
}

Point group_action_g(const Expr& g, double eps, const Point& pt, const NumericParams& p) {
  auto [x, y, u] = pt;
  double gv = evaluate(g, {{"x", x}, {"y", y}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}});
  double arg = p.gamma * gv * eps + std::exp(p.gamma * u);
  if (!(arg > 0.0)) throw DomainError("G_g leaves the log domain");
  return {x, y, std::log(arg) / p.gamma};
}

Point GroupWord::apply(const Point& pt, const NumericParams& p) const {
  Point q = pt;
  for (const auto& s : steps) q = s.generator == 5 ? group_action_g(g, s.epsilon, q, p) : group_action(s.generator, s.epsilon, q, p);
  return q;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.g = g;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) w.steps.push_back({it->generator, -it->epsilon});
  return w;
}

Solution transform_solution(int i, double eps, const Solution& f, const NumericParams& p) {
  Solution s;
  s.label = f.label + " under G" + std::to_string(i);
  switch (i) {
    case 1:
      s.u = [f, eps](const HyperDual& x, const HyperDual& y) { return f.u(x - eps, y); };
      s.domain = [f, eps](double x, double y) { return f.contains(x - eps, y); };
      break;
    case 2:
      s.u = [f, eps](const HyperDual& x, const HyperDual& y) { return f.u(x, y - eps); };
      s.domain = [f, eps](double x, double y) { return f.contains(x, y - eps); };
      break;
    case 3:
      s.u = [f, eps](const HyperDual& x, const HyperDual& y) { return f.u(x, y) + eps; };
      s.domain = f.domain;
      break;
    case 4: {
      const double ep = std::exp(p.gamma * eps), em = std::exp(-p.gamma * eps);
      s.u = [f, p, ep, em](const HyperDual& x, const HyperDual& y) {
        return p.beta / p.gamma * x * (ep - 1) + p.alpha / p.gamma * y * (em - 1) + f.u(x * ep, y * em);
      };
      s.domain = [f, ep, em](double x, double y) { return f.contains(x * ep, y * em); };
      break;
    }
    default:
      throw std::out_of_range("group generator must be 1..4");
  }
  return s;
}

Solution transform_solution_g(const Expr& g, double eps, const Solution& f, const NumericParams& p) {
  std::map<std::string, HyperDual> consts{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
  auto arg = [g, eps, f, p, consts](const HyperDual& x, const HyperDual& y) {
    auto b = consts;
    b["x"] = x;
    b["y"] = y;
    return p.gamma * evaluate_hd(g, b) * eps + exp(p.gamma * f.u(x, y));
  };
  Solution s;
  s.label = f.label + " under G_g";
  s.u = [arg, p](const HyperDual& x, const HyperDual& y) {
    HyperDual a = arg(x, y);
    if (!(a.v > 0.0)) throw DomainError("G_g leaves the log domain");
    return log(a) / p.gamma;
  };
  s.domain = [arg, f](double x, double y) { return f.contains(x, y) && arg(HyperDual(x), HyperDual(y)).v > 0.0; };
  return s;
}

}  // namespace lie_thomas
