#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liethomas/expr.hpp"

namespace lie_thomas {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Names known to the parser. The default table knows x, y, u, the jets up
/// to third order, alpha/beta/gamma and the usual constant names, and the
/// unknown functions xi, eta, phi of (x, y, u) and f, g, w of (x, y).
class SymbolTable {
 public:
  SymbolTable();

  void declare_parameter(const std::string& name) { parameters_.insert(name); }
  void declare_variable(const std::string& name) { variables_.insert(name); }
  void declare_function(const std::string& name, std::vector<std::string> formals) {
    functions_[name] = std::move(formals);
  }

  /// Resolves a bare identifier (no call parentheses). Returns false if unknown.
  bool resolve(const std::string& name, Expr& out) const;
  /// Resolves an unknown-function head such as "phi_xu" to its name, formals
  /// and derivative multi-index.
  bool resolve_function(const std::string& name, std::string& base, std::vector<std::string>& formals,
                        std::vector<int>& derivs) const;

 private:
  std::set<std::string> parameters_;
  std::set<std::string> variables_;
  std::map<std::string, std::vector<std::string>> functions_;
};

Expr parse(std::string_view text, const SymbolTable& symbols = SymbolTable());

}  // namespace lie_thomas
