#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liethomas/determining_system.hpp"
#include "liethomas/prolongation.hpp"
#include "liethomas/verification.hpp"

namespace lie_thomas {

/// a1 v1 + a2 v2 + a3 v3 + a4 v4 (+ v_g), where v1 = d/dx, v2 = d/dy,
/// v3 = d/du, v4 = -gamma x d/dx + gamma y d/dy + (beta x - alpha y) d/du and
/// v_g = -(g/gamma) e^{-gamma u} d/du.
struct AlgebraElement {
  std::array<Expr, 4> a{};
  std::optional<Expr> g;

  static AlgebraElement basis(int i);
  static AlgebraElement from_g(const Expr& g);
  static AlgebraElement coords(const Expr& a1, const Expr& a2, const Expr& a3, const Expr& a4);

  bool has_g() const { return g.has_value(); }
  std::string str() const;
  std::string latex() const;
};

AlgebraElement operator+(const AlgebraElement& v, const AlgebraElement& w);
AlgebraElement operator-(const AlgebraElement& v, const AlgebraElement& w);
AlgebraElement operator*(const Expr& s, const AlgebraElement& v);
bool equivalent(const AlgebraElement& v, const AlgebraElement& w);

VectorField to_field(const AlgebraElement& v, const ThomasParams& p);
/// Decomposes a vector field over the basis; throws SymbolicError when the
/// field is not in the symmetry algebra.
AlgebraElement from_field(const VectorField& vf, const ThomasParams& p);

/// Lie bracket of vector fields, [v, w] = v(w) - w(v) componentwise.
VectorField bracket(const VectorField& v, const VectorField& w);

AlgebraElement commutator(const AlgebraElement& v, const AlgebraElement& w, const ThomasParams& p);

/// psi = -gamma x g_x + gamma y g_y - gamma (beta x - alpha y) g.
Expr psi_of(const Expr& g, const ThomasParams& p);

/// Commutator table as published, indices 1..4 for v1..v4 and 5 for v_g.
AlgebraElement published_commutator(int i, int j, const Expr& g, const ThomasParams& p);

/// Closed-form Ad(exp(eps v_i)) w for the finite part, i in 1..4.
AlgebraElement adjoint(int i, const Expr& eps, const AlgebraElement& w, const ThomasParams& p);

/// Adjoint table as published (row i acting on column j).
AlgebraElement published_adjoint(int i, int j, const Expr& eps, const ThomasParams& p);

struct LieSeriesResult {
  AlgebraElement closed_form;
  bool terminated = false;
  int terms_used = 0;
};

/// Sums sum_n (-eps)^n/n! ad(v_i)^n w from brackets alone. Coordinates whose
/// series does not terminate within `order` terms must fit c0 + K(e^{r eps} - 1)
/// with r = +-gamma; otherwise SymbolicError.
LieSeriesResult adjoint_lie_series(int i, const Expr& eps, const AlgebraElement& w, const ThomasParams& p,
                                   int order = 12);

/// Numeric partial sum of the Lie series with `terms` terms (finite part).
std::array<double, 4> adjoint_series_numeric(int i, double eps, const std::array<double, 4>& w,
                                             const ThomasParams& p, int terms = 40);

using Point = std::array<double, 3>;

/// exp(eps v_i)(x, y, u) for i in 1..4.
Point group_action(int i, double eps, const Point& pt, const NumericParams& p);
/// The v_g flow as published: u -> (1/gamma) log(gamma g eps + e^{gamma u}).
Point group_action_g(const Expr& g, double eps, const Point& pt, const NumericParams& p);

/// Ordered composition of one-parameter group elements; generator 5 is G_g.
struct GroupWord {
  struct Step {
    int generator = 1;
    double epsilon = 0.0;
  };
  std::vector<Step> steps;
  Expr g = Expr(1);

  Point apply(const Point& pt, const NumericParams& p) const;
  GroupWord inverse() const;
};

/// Image of a solution under G_i (i in 1..4).
Solution transform_solution(int i, double eps, const Solution& f, const NumericParams& p);
Solution transform_solution_g(const Expr& g, double eps, const Solution& f, const NumericParams& p);

}  // namespace lie_thomas
