#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liethomas/classifier.hpp"
#include "liethomas/verification.hpp"

namespace lie_thomas {

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolutionFamily {
  CaseTag tag = CaseTag::Zero;
  std::string name;
  std::map<std::string, double> constants;
  /// Empty for the no-solution markers.
  std::optional<Solution> solution;
  std::optional<Expr> closed_form;
  std::string note;

  bool has_solution() const { return solution.has_value(); }
};

/// Power series solution of chi y'' + e y' + m y = 0 regular at chi = 0.
struct FuchsSeries {
  double e = 1.0;
  double m = 1.0;
  std::vector<double> coefficients;  // a_0 .. a_N from the recurrence
  double tail_bound = 0.0;

  struct Value {
    double y = 0.0;
    double dy = 0.0;
    double d2y = 0.0;
  };

  static FuchsSeries build(double e, double m, int n_max = 200);
  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Sums until the terms drop below 1e-17 of the partial sum; throws
  /// FamilyError if the stored coefficients run out first.
  Value evaluate(double chi) const;
};

/// (-m)^n / (n! e (e+1) ... (e+n-1)), evaluated without the recurrence.
double fuchs_coefficient_closed(double e, double m, int n);
double fuchs_solution(double e, double m, double chi, int n_max = 200);

struct Case1Parts {
  double theta = 0.0;
  double dtheta = 0.0;
  double zp = 0.0;
  double integral = 0.0;  // int_{chi0}^{chi} |t|^-e / y_p^2 dt
};

/// Building blocks of the Case 1 family.
class Case1Solver {
 public:
  Case1Solver(const NumericParams& p, double a1, double a2, double c0);

  double e() const { return e_; }
  double m() const { return m_; }
  const FuchsSeries& series() const { return series_; }
  double base_point(double chi) const { return chi < 0 ? -1.0 : 1.0; }

  Case1Parts parts(double chi) const;
  /// varsigma by quadrature of theta from the base point.
  double varsigma(double chi) const;
  /// Same quantity through y = y_p (I + C0): (1/gamma) log|y / y(chi0)|.
  double varsigma_log(double chi) const;
  /// Admissible chi: same sign as the base point, no zero of y_p or of
  /// I + C0 between them, and kept away from chi = 0.
  bool admissible(double chi) const;
  /// Zeros of y_p nearest to 0 on either side (+-infinity if none within 50).
  double first_zero() const { return first_zero_; }
  double last_zero() const { return last_zero_; }

 private:
  NumericParams p_;
  double a1_, a2_, c0_;
  double e_, m_;
  FuchsSeries series_;
  double first_zero_;
  double last_zero_;

  double find_zero(double direction) const;
};

SolutionFamily case1_solution(const NumericParams& p, double a1, double a2, double c0, double c);
/// root = +1 or -1 picks theta0.
SolutionFamily case21a_solution(const NumericParams& p, double a1, double a2, int root, double A, double c);
SolutionFamily case21b_solution(const NumericParams& p, double a1, double a2, double A0, double c);
SolutionFamily case22_solution(const NumericParams& p, double a, double c, bool mirrored = false);
SolutionFamily case31a_solution(const NumericParams& p, double k0, double c);
SolutionFamily case31b_solution(const NumericParams& p, double a2, double k, double c);
SolutionFamily constant_solution(double c);
std::vector<SolutionFamily> trivial_solutions();

/// Constants of 2.1a: theta0 root of the constant-theta quadratic and the
/// exponential rate C.
struct Case21aConstants {
  double theta0 = 0.0;
  double C = 0.0;
  double discriminant = 0.0;
};
Case21aConstants case21a_constants(const NumericParams& p, double a1, double a2, int root);

struct Case21bConstants {
  double A1 = 0.0;
  double A2 = 0.0;
  double A3 = 0.0;
  double Xi = 0.0;
};
Case21bConstants case21b_constants(const NumericParams& p, double a1, double a2);

/// Family for a tag with named constants; missing constants take defaults.
SolutionFamily make_family(CaseTag tag, const NumericParams& p, const std::map<std::string, double>& constants);
/// Constant names and defaults accepted by make_family.
std::map<std::string, double> default_constants(CaseTag tag);

}  // namespace lie_thomas
