#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "liethomas/classifier.hpp"
#include "liethomas/determining_system.hpp"
#include "liethomas/prolongation.hpp"

namespace lie_thomas {

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical generator of a case with coordinates that may stay symbolic.
struct CaseSpec {
  CaseTag tag = CaseTag::Case1;
  Expr a1 = parameter("a1");
  Expr a2 = parameter("a2");
  bool mirrored = false;

  static CaseSpec from(const CanonicalCase& c);
  /// Symbolic a1, a2 with the tag's defining relation imposed
  /// (a2 = beta/alpha in 3.1a, a1 = -gamma/beta in 2.3, ...).
  static CaseSpec symbolic(CaseTag tag, const ThomasParams& p);
};

VectorField case_field(const CaseSpec& c, const ThomasParams& p);

struct InvariantPair {
  Expr chi;
  Expr varsigma;
  std::string domain;
};

InvariantPair invariants(const CaseSpec& c, const ThomasParams& p);

enum class OdeKind { Fuchs, Riccati, Bernoulli, Linear, Algebraic };
std::string to_string(OdeKind kind);

/// Symbols used inside reduced equations.
Expr chi_symbol();
Expr varsigma_symbol(int order);  // varsigma, varsigma_chi, varsigma_chichi
Expr theta_symbol(int order);     // theta, theta_chi

struct ReducedODE {
  int order = 0;
  OdeKind kind = OdeKind::Linear;
  /// Equation "= 0" in chi and varsigma_symbol(0..2).
  Expr equation;
  /// First-order form in theta = varsigma_chi when one exists, "= 0".
  std::optional<Expr> theta_equation;
  /// Fuchs form chi y'' + e y' + m y = 0 (Case 1 only).
  std::optional<Expr> fuchs_e;
  std::optional<Expr> fuchs_m;
  std::string note;
};

ReducedODE reduced_ode(const CaseSpec& c, const ThomasParams& p);

/// v(chi) and v(varsigma) both vanish symbolically.
bool annihilates(const CaseSpec& c, const ThomasParams& p);

struct ReductionCheck {
  bool ok = false;
  /// Thomas operator after writing u through varsigma(chi) by the chain rule.
  Expr substituted;
  /// substituted = ratio * equation.
  Expr ratio;
  std::string message;
};

ReductionCheck verify_reduction(const CaseSpec& c, const ThomasParams& p);

/// u_x, u_y, u_xy of the invariant ansatz, written with varsigma_symbol.
std::array<Expr, 3> chain_rule_derivatives(const CaseSpec& c, const ThomasParams& p);

/// Rank of d(chi, varsigma)/d(x, y, u) at a numeric point is 2.
bool functionally_independent(const CaseSpec& c, const ThomasParams& p, double x, double y, double u);

}  // namespace lie_thomas
