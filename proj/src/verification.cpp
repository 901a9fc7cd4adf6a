#include "liethomas/verification.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace lie_thomas {

NumericParams NumericParams::from(const ThomasParams& p) {
  auto b = p.numeric_bindings();
  return {b["alpha"], b["beta"], b["gamma"]};
}

HyperDual evaluate_hd(const Expr& e, const std::map<std::string, HyperDual>& bindings) {
  switch (e.kind()) {
    case NodeKind::Constant:
      return e.value().to_double();
    case NodeKind::Symbol: {
      auto it = bindings.find(e.name());
      if (it == bindings.end()) throw SymbolicError("no value bound for '" + e.name() + "'");
      return it->second;
    }
    case NodeKind::Function:
      throw SymbolicError("cannot evaluate unknown function '" + e.str() + "'");
    case NodeKind::Sum: {
      HyperDual s = e.value().to_double();
      for (const auto& t : e.operands()) s += evaluate_hd(t, bindings);
      return s;
    }
    case NodeKind::Product: {
      HyperDual p = e.value().to_double();
      for (const auto& f : e.operands()) p *= evaluate_hd(f, bindings);
      return p;
    }
    case NodeKind::Power:
      return pow(evaluate_hd(e.operands()[0], bindings), e.exponent());
    case NodeKind::Exp:
      return exp(evaluate_hd(e.operands()[0], bindings));
    case NodeKind::Log: {
      HyperDual a = evaluate_hd(e.operands()[0], bindings);
      if (!(a.v > 0.0)) throw DomainError("log of non-positive value");
      return log(a);
    }
    case NodeKind::Tan:
      return tan(evaluate_hd(e.operands()[0], bindings));
    case NodeKind::Arctan:
      return atan(evaluate_hd(e.operands()[0], bindings));
  }
  return 0.0;
}

Solution solution_from_expr(const Expr& u, const NumericBindings& values, std::string label) {
  std::map<std::string, HyperDual> base;
  for (const auto& [k, v] : values) base[k] = v;
  Solution s;
  s.label = std::move(label);
  s.u = [u, base](const HyperDual& x, const HyperDual& y) {
    auto b = base;
    b["x"] = x;
    b["y"] = y;
    return evaluate_hd(u, b);
  };
  s.domain = [f = s.u](double x, double y) {
    try {
      double v = f(HyperDual(x), HyperDual(y)).v;
      return std::isfinite(v);
    } catch (const DomainError&) {
      return false;
    }
  };
  return s;
}

double residual(const Solution& u, double x, double y, const NumericParams& p) {
  HyperDual h = u(x, y);
  return h.dxy + p.alpha * h.dx + p.beta * h.dy + p.gamma * h.dx * h.dy;
}

GridReport residual_grid(const Solution& u, const GridSpec& grid, const NumericParams& p) {
  if (grid.nx < 2 || grid.ny < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
  GridReport report;
  for (int i = 0; i < grid.nx; ++i) {
    double x = grid.x_min + (grid.x_max - grid.x_min) * i / (grid.nx - 1);
    for (int j = 0; j < grid.ny; ++j) {
      double y = grid.y_min + (grid.y_max - grid.y_min) * j / (grid.ny - 1);
      if (!u.contains(x, y)) {
        ++report.points_skipped;
        continue;
      }
      double r = std::abs(residual(u, x, y, p));
      if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
      ++report.points_evaluated;
      if (!report.has_worst || r > report.max_residual) {
        report.max_residual = r;
        report.worst_point = {x, y};
        report.has_worst = true;
      }
    }
  }
  if (report.points_evaluated == 0) throw DomainError("grid does not intersect the solution domain");
  return report;
}

double oracle_mu(double lambda, const NumericParams& p) {
  if (lambda + p.beta == 0.0) throw DomainError("lambda = -beta admits no mu");
  return -p.alpha * lambda / (lambda + p.beta);
}

Solution oracle_solution(std::vector<OracleMode> modes, const NumericParams& p) {
  if (modes.empty()) throw std::invalid_argument("oracle needs at least one mode");
  for (auto& m : modes) {
    if (!(m.c > 0.0)) throw DomainError("oracle weights must be positive");
    m.mu = oracle_mu(m.lambda, p);
  }
  Solution s;
  s.label = "oracle";
  s.u = [modes, g = p.gamma](const HyperDual& x, const HyperDual& y) {
    HyperDual w = 0.0;
    for (const auto& m : modes) w += m.c * exp(m.lambda * x + m.mu * y);
    return log(w) / g;
  };
  return s;
}

std::vector<OracleSample> oracle_solutions(const NumericParams& p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lam(-1.5, 1.5);
  std::uniform_real_distribution<double> weight(0.2, 2.0);
  std::uniform_int_distribution<int> modes(1, 3);
  std::vector<OracleSample> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<OracleMode> ms;
    int n = modes(rng);
    for (int i = 0; i < n; ++i) {
      double l = lam(rng);
      if (std::abs(l + p.beta) < 0.25) l = -l;
      if (std::abs(l + p.beta) < 0.25) l += 1.0;
      ms.push_back({weight(rng), l, 0.0});
    }
    Solution s = oracle_solution(ms, p);
    for (auto& m : ms) m.mu = oracle_mu(m.lambda, p);
    out.push_back({ms, s});
  }
  return out;
}

}  // namespace lie_thomas
