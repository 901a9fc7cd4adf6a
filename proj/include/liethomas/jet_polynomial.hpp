#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "liethomas/expr.hpp"

namespace lie_thomas {

inline constexpr std::size_t kJetCount = 9;

/// Jets in precedence order: u_x, u_y, u_xx, u_xy, u_yy, u_xxx, u_xxy, u_xyy, u_yyy.
inline constexpr std::array<std::array<int, 2>, kJetCount> kJetOrders{
    {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}};

/// Exponent vector over the jets in kJetOrders.
using JetMonomial = std::array<int, kJetCount>;

int jet_index(int nx, int ny);

/// Graded order: monomials free of higher-order jets first, then by total
/// degree, then by exponents in jet precedence order (u_x before u_y).
struct MonomialLess {
  bool operator()(const JetMonomial& a, const JetMonomial& b) const;
};

JetMonomial monomial_of(std::string_view text);
Expr monomial_expr(const JetMonomial& m);
std::string monomial_str(const JetMonomial& m);
std::string monomial_latex(const JetMonomial& m);

/// Polynomial in the jet variables with coefficients free of jets.
class JetPolynomial {
 public:
  using Terms = std::map<JetMonomial, Expr, MonomialLess>;

  JetPolynomial() = default;

  /// Expands e and collects jet monomials. Throws SymbolicError when a jet
  /// occurs anywhere other than as a polynomial factor.
  static JetPolynomial from_expr(const Expr& e);

  Expr to_expr() const;
  const Terms& terms() const { return terms_; }
  Expr coefficient(const JetMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient-wise symbolic equality.
  bool equivalent_to(const JetPolynomial& other) const;

 private:
  Terms terms_;
};

JetPolynomial normalize(const Expr& e);

}  // namespace lie_thomas
