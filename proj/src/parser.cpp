#include "liethomas/parser.hpp"

#include <cctype>

namespace lie_thomas {

SymbolTable::SymbolTable() {
  parameters_ = {"alpha", "beta", "gamma", "a1", "a2", "a3", "a4", "k", "k0", "A", "A0", "c",
                 "eps", "epsilon", "lambda", "mu", "e", "m"};
  variables_ = {"x", "y", "u", "chi"};
  functions_ = {{"xi", {"x", "y", "u"}}, {"eta", {"x", "y", "u"}}, {"phi", {"x", "y", "u"}},
                {"f", {"x", "y"}},       {"g", {"x", "y"}},       {"w", {"x", "y"}}};
}

bool SymbolTable::resolve(const std::string& name, Expr& out) const {
  if (variables_.count(name)) {
    out = variable(name);
    return true;
  }
  if (parameters_.count(name)) {
    out = parameter(name);
    return true;
  }
  if (name.size() >= 3 && name.size() <= 5 && name.rfind("u_", 0) == 0 &&
      name.find_first_not_of("xy", 2) == std::string::npos) {
    out = symbol(name, SymbolKind::Jet);
    return true;
  }
  std::string base;
  std::vector<std::string> formals;
  std::vector<int> derivs;
  if (resolve_function(name, base, formals, derivs)) {
    std::vector<Expr> args;
    for (const auto& f : formals) args.push_back(variable(f));
    out = function(base, formals, std::move(args), std::move(derivs));
    return true;
  }
  return false;
}

bool SymbolTable::resolve_function(const std::string& name, std::string& base, std::vector<std::string>& formals,
                                   std::vector<int>& derivs) const {
  auto us = name.find('_');
  base = name.substr(0, us);
  auto it = functions_.find(base);
  if (it == functions_.end()) return false;
  formals = it->second;
  derivs.assign(formals.size(), 0);
  if (us == std::string::npos) return true;
  std::string suffix = name.substr(us + 1);
  if (suffix.empty()) return false;
  std::size_t pos = 0;
  while (pos < suffix.size()) {
    std::size_t best = formals.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < formals.size(); ++i) {
      const auto& f = formals[i];
      if (f.size() > best_len && suffix.compare(pos, f.size(), f) == 0) {
        best = i;
        best_len = f.size();
      }
    }
    if (best == formals.size()) return false;
    derivs[best] += 1;
    pos += best_len;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : text_(text), symbols_(symbols) {}

  Expr parse_all() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError("syntax error: " + message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expression() {
    std::vector<Expr> terms{term()};
    while (true) {
      if (accept('+')) terms.push_back(term());
      else if (accept('-')) terms.push_back(-term());
      else break;
    }
    return add(std::move(terms));
  }

  Expr term() {
    Expr acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        break;
      }
    }
    return acc;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      Expr ex = unary();
      if (!ex.is_constant() || !ex.value().is_integer()) throw ParseError("exponent must be an integer", at);
      return pow(base, static_cast<int>(ex.value().num()));
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      try {
        return constant(Rational::parse(text_.substr(start, pos_ - start)));
      } catch (const std::exception&) {
        throw ParseError("bad number", start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      return identifier(name, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    if (accept(')')) return args;
    args.push_back(expression());
    while (accept(',')) args.push_back(expression());
    expect(')');
    return args;
  }

  Expr identifier(const std::string& name, std::size_t start) {
    skip_space();
    bool call = pos_ < text_.size() && text_[pos_] == '(';
    if (name == "exp" || name == "log" || name == "tan" || name == "arctan" || name == "atan") {
      if (!call) fail("expected '(' after " + name);
      ++pos_;
      auto args = arguments();
      if (args.size() != 1) throw ParseError(name + " takes one argument", start);
      if (name == "exp") return exp(args[0]);
      if (name == "log") {
        if (args[0].is_zero()) throw ParseError("log(0)", start);
        return log(args[0]);
      }
      if (name == "tan") return tan(args[0]);
      return arctan(args[0]);
    }
    std::string base;
    std::vector<std::string> formals;
    std::vector<int> derivs;
    if (call && symbols_.resolve_function(name, base, formals, derivs)) {
      ++pos_;
      auto args = arguments();
      if (args.size() != formals.size())
        throw ParseError(base + " expects " + std::to_string(formals.size()) + " arguments", start);
      return function(base, formals, std::move(args), std::move(derivs));
    }
    Expr out;
    if (!symbols_.resolve(name, out)) throw ParseError("unknown identifier '" + name + "'", start);
    return out;
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).parse_all(); }

}  // namespace lie_thomas
