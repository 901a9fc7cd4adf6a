#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liethomas/determining_system.hpp"
#include "liethomas/expr.hpp"
#include "liethomas/hyperdual.hpp"

namespace lie_thomas {

/// Raised when a point lies outside the domain of a formula (log of a
/// non-positive number, tan pole, vanishing series, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NumericParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;

  static NumericParams from(const ThomasParams& p);
};

using Field = std::function<HyperDual(const HyperDual& x, const HyperDual& y)>;
using DomainPredicate = std::function<bool(double x, double y)>;

/// An evaluable candidate solution u(x, y) with the region where it is defined.
struct Solution {
  Field u;
  DomainPredicate domain = [](double, double) { return true; };
  std::string label;

  HyperDual operator()(double x, double y) const { return u(HyperDual::seed_x(x), HyperDual::seed_y(y)); }
  bool contains(double x, double y) const { return domain(x, y); }
};

/// Evaluates e with hyper-dual values bound to its symbols.
HyperDual evaluate_hd(const Expr& e, const std::map<std::string, HyperDual>& bindings);

/// Wraps a closed-form u(x, y); alpha, beta, gamma and the constants in
/// `values` are bound numerically. The default domain is "every logarithm
/// argument positive and the value finite".
Solution solution_from_expr(const Expr& u, const NumericBindings& values, std::string label = {});

/// u_xy + alpha u_x + beta u_y + gamma u_x u_y at (x, y).
double residual(const Solution& u, double x, double y, const NumericParams& p);

struct GridSpec {
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -2.0;
  double y_max = 2.0;
  int nx = 50;
  int ny = 50;
};

struct GridReport {
  double max_residual = 0.0;
  std::array<double, 2> worst_point{};
  bool has_worst = false;
  int points_evaluated = 0;
  int points_skipped = 0;
};

/// Residual over the domain-filtered grid. Throws DomainError if no grid
/// point lies in the domain.
GridReport residual_grid(const Solution& u, const GridSpec& grid, const NumericParams& p);

struct OracleMode {
  double c = 1.0;
  double lambda = 1.0;
  double mu = 0.0;
};

/// mu with lambda mu + alpha lambda + beta mu = 0.
double oracle_mu(double lambda, const NumericParams& p);

/// u = (1/gamma) log(sum c_i exp(lambda_i x + mu_i y)); mu_i is recomputed
/// from lambda_i. Throws DomainError for c_i <= 0 or lambda_i = -beta.
Solution oracle_solution(std::vector<OracleMode> modes, const NumericParams& p);

struct OracleSample {
  std::vector<OracleMode> modes;
  Solution solution;
};

std::vector<OracleSample> oracle_solutions(const NumericParams& p, int count, std::uint64_t seed);

}  // namespace lie_thomas
