#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "liethomas/rational.hpp"

namespace lie_thomas {

enum class SymbolKind { Variable, Jet, Parameter };

enum class NodeKind { Constant, Symbol, Function, Sum, Product, Power, Exp, Log, Tan, Arctan };

struct Node;

/// Immutable symbolic expression.
///
/// Expressions are built through the free factory functions below, which keep
/// every tree in a light canonical form: sums and products are flattened and
/// sorted, like terms and like factors are collected, rational constants are
/// folded, x^0 = 1, x^1 = x, exp(log z) = z and exp(a)·exp(b) = exp(a + b).
/// Distribution of products over sums only happens in expand().
///
/// Sums keep their constant offset and products their rational coefficient in
/// the node itself, so `operands()` of a sum are the non-constant terms and
/// `operands()` of a product are the non-constant factors.
class Expr {
 public:
  Expr();
  Expr(const Rational& r);  // NOLINT(implicit)
  Expr(std::int64_t n) : Expr(Rational(n)) {}  // NOLINT(implicit)
  Expr(int n) : Expr(Rational(n)) {}  // NOLINT(implicit)

  NodeKind kind() const;
  bool is_constant() const { return kind() == NodeKind::Constant; }
  bool is_zero() const;
  bool is_one() const;

  /// Constant value, sum offset or product coefficient depending on kind.
  const Rational& value() const;
  const std::string& name() const;
  SymbolKind symbol_kind() const;
  std::span<const Expr> operands() const;
  int exponent() const;
  /// Formal argument names of an unknown function (e.g. x, y, u for xi).
  const std::vector<std::string>& formals() const;
  /// Derivative multi-index for functions; (nx, ny) for jets.
  std::span<const int> derivatives() const;

  std::size_t hash() const;
  const Node* raw() const { return node_.get(); }

  /// Parseable ASCII rendering.
  std::string str() const;
  std::string latex() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  NodeKind kind = NodeKind::Constant;
  Rational value;
  std::string name;
  SymbolKind symbol_kind = SymbolKind::Parameter;
  std::vector<Expr> ops;
  std::vector<std::string> formals;
  std::vector<int> derivs;
  int exponent = 0;
  std::size_t hash = 0;
};

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return (a <=> b) < 0; }
};

using Bindings = std::map<std::string, Expr>;
using NumericBindings = std::map<std::string, double>;

class SymbolicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- construction ----

Expr constant(const Rational& r);
Expr symbol(const std::string& name, SymbolKind kind);
Expr parameter(const std::string& name);
Expr variable(const std::string& name);
/// Jet variable u_{x^nx y^ny}; (0,0) is the dependent variable u itself.
Expr jet(int nx, int ny);
std::string jet_name(int nx, int ny);

Expr x_var();
Expr y_var();
Expr u_var();

/// Unknown function application name_{derivs}(args) with formal names for
/// printing derivative suffixes.
Expr function(const std::string& name, std::vector<std::string> formals, std::vector<Expr> args,
              std::vector<int> derivs = {});
/// Shorthand for an unknown function applied to its own formals.
Expr function(const std::string& name, std::vector<std::string> formals);

Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr pow(const Expr& base, int exponent);
Expr exp(const Expr& arg);
Expr log(const Expr& arg);
Expr tan(const Expr& arg);
Expr arctan(const Expr& arg);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
inline Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
inline Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
inline Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

// ---- calculus and rewriting ----

/// Partial derivative with respect to the symbol `var` (variable, jet or
/// parameter). Unknown functions differentiate through the chain rule into
/// their registered derivative symbols.
Expr differentiate(const Expr& e, const Expr& var);

/// Simultaneous substitution of symbols by name.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Replaces every application of the unknown function `name` (and of its
/// derivatives) by `body`, an expression in the function's formals.
Expr substitute_function(const Expr& e, const std::string& name, const Expr& body);

/// Fully distributes products and positive integer powers over sums.
/// Negative powers of sums are kept as atoms with a monic expanded base.
Expr expand(const Expr& e);

/// Exact zero test for rational expressions in the supported atoms: expands,
/// clears sum denominators and expands again.
bool is_zero(const Expr& e);
inline bool equivalent(const Expr& a, const Expr& b) { return is_zero(a - b); }

/// Sum terms of the expanded form (a single term for non-sums).
std::vector<Expr> terms_of(const Expr& expanded);

/// Coefficient of `atom^power` in the expansion of e, treating other factors
/// as coefficients.
Expr coefficient_of(const Expr& e, const Expr& atom, int power = 1);

bool depends_on(const Expr& e, const std::string& symbol_name);
bool contains_jet(const Expr& e);
/// Highest total jet order appearing in e (0 if none).
int max_jet_order(const Expr& e);

double evaluate(const Expr& e, const NumericBindings& bindings);

}  // namespace lie_thomas

template <>
struct std::hash<lie_thomas::Expr> {
  std::size_t operator()(const lie_thomas::Expr& e) const noexcept { return e.hash(); }
};
