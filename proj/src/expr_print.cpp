#include <map>
#include <string>
#include <vector>

#include "liethomas/expr.hpp"

namespace lie_thomas {

namespace {

const std::map<std::string, std::string>& latex_names() {
  static const std::map<std::string, std::string> names{
      {"alpha", "\\alpha"}, {"beta", "\\beta"},   {"gamma", "\\gamma"}, {"epsilon", "\\varepsilon"},
      {"eps", "\\varepsilon"}, {"xi", "\\xi"},    {"eta", "\\eta"},     {"phi", "\\varphi"},
      {"psi", "\\psi"},     {"chi", "\\chi"},     {"theta", "\\theta"}, {"varsigma", "\\varsigma"},
      {"lambda", "\\lambda"}, {"mu", "\\mu"},     {"kappa", "\\kappa"}, {"tau", "\\tau"},
  };
  return names;
}

std::string latex_symbol(const std::string& name) {
  if (auto it = latex_names().find(name); it != latex_names().end()) return it->second;
  auto us = name.find('_');
  if (us != std::string::npos) return latex_symbol(name.substr(0, us)) + "_{" + name.substr(us + 1) + "}";
  // a1 -> a_{1}
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  if (split > 0 && split < name.size()) return latex_symbol(name.substr(0, split)) + "_{" + name.substr(split) + "}";
  return name;
}

class Printer {
 public:
  explicit Printer(bool latex) : latex_(latex) {}

  std::string print(const Expr& e) const {
    switch (e.kind()) {
      case NodeKind::Constant: return constant_str(e.value());
      case NodeKind::Symbol: return latex_ ? latex_symbol(e.name()) : e.name();
      case NodeKind::Function: return function_str(e);
      case NodeKind::Sum: return sum_str(e);
      case NodeKind::Product: return product_str(e.value(), e.operands());
      case NodeKind::Power: {
        std::vector<Expr> one{e};
        return product_str(Rational(1), one);
      }
      case NodeKind::Exp:
        return latex_ ? "e^{" + print(e.operands()[0]) + "}" : "exp(" + print(e.operands()[0]) + ")";
      case NodeKind::Log: return call("log", "\\log", e.operands()[0]);
      case NodeKind::Tan: return call("tan", "\\tan", e.operands()[0]);
      case NodeKind::Arctan: return call("arctan", "\\arctan", e.operands()[0]);
    }
    return "?";
  }

 private:
  std::string call(const char* text_name, const char* latex_name, const Expr& arg) const {
    if (latex_) return std::string(latex_name) + "\\left(" + print(arg) + "\\right)";
    return std::string(text_name) + "(" + print(arg) + ")";
  }

  std::string constant_str(const Rational& r) const {
    if (!latex_ || r.is_integer()) return r.str();
    std::string s = r.sign() < 0 ? "-" : "";
    return s + "\\frac{" + std::to_string(r.sign() < 0 ? -r.num() : r.num()) + "}{" + std::to_string(r.den()) + "}";
  }

  std::string function_str(const Expr& e) const {
    std::string suffix;
    for (std::size_t i = 0; i < e.formals().size(); ++i) {
      for (int d = 0; d < e.derivatives()[i]; ++d) suffix += e.formals()[i];
    }
    std::string head = latex_ ? latex_symbol(e.name()) : e.name();
    if (!suffix.empty()) head += latex_ ? "_{" + suffix + "}" : "_" + suffix;
    bool at_formals = true;
    for (std::size_t i = 0; i < e.formals().size(); ++i) {
      const Expr& a = e.operands()[i];
      if (a.kind() != NodeKind::Symbol || a.name() != e.formals()[i]) at_formals = false;
    }
    if (at_formals) return head;
    std::string args;
    for (const auto& a : e.operands()) {
      if (!args.empty()) args += ", ";
      args += print(a);
    }
    return latex_ ? head + "\\left(" + args + "\\right)" : head + "(" + args + ")";
  }

  std::string sum_str(const Expr& e) const {
    std::vector<std::string> parts;
    for (const auto& t : e.operands()) parts.push_back(print(t));
    if (!e.value().is_zero()) parts.push_back(constant_str(e.value()));
    std::string out;
    for (const auto& p : parts) {
      if (out.empty()) {
        out = p;
      } else if (!p.empty() && p.front() == '-') {
        out += " - " + p.substr(1);
      } else {
        out += " + " + p;
      }
    }
    return out;
  }

  static bool is_atomic(const Expr& e) {
    switch (e.kind()) {
      case NodeKind::Symbol:
      case NodeKind::Function:
      case NodeKind::Exp:
      case NodeKind::Log:
      case NodeKind::Tan:
      case NodeKind::Arctan:
        return true;
      case NodeKind::Constant:
        return e.value().is_integer() && e.value().sign() >= 0;
      default:
        return false;
    }
  }

  std::string factor_str(const Expr& base, int k) const {
    std::string b = print(base);
    if (!is_atomic(base)) b = latex_ ? "\\left(" + b + "\\right)" : "(" + b + ")";
    if (k == 1) return b;
    if (latex_) {
      if (base.kind() == NodeKind::Exp) return "e^{" + std::to_string(k) + " \\left(" + print(base.operands()[0]) + "\\right)}";
      return b + "^{" + std::to_string(k) + "}";
    }
    return b + "^" + std::to_string(k);
  }

  std::string product_str(const Rational& coef, std::span<const Expr> ops) const {
    std::vector<std::string> num;
    std::vector<std::string> den;
    std::int64_t p = coef.num() < 0 ? -coef.num() : coef.num();
    if (p != 1) num.push_back(std::to_string(p));
    if (coef.den() != 1) den.push_back(std::to_string(coef.den()));
    for (const auto& f : ops) {
      if (f.kind() == NodeKind::Power) {
        int k = f.exponent();
        (k > 0 ? num : den).push_back(factor_str(f.operands()[0], k > 0 ? k : -k));
      } else {
        num.push_back(factor_str(f, 1));
      }
    }
    std::string sign = coef.sign() < 0 ? "-" : "";
    std::string sep = latex_ ? " " : "*";
    auto join = [&](const std::vector<std::string>& items) {
      std::string s;
      for (const auto& i : items) s += (s.empty() ? "" : sep) + i;
      return s.empty() ? std::string("1") : s;
    };
    if (den.empty()) return sign + join(num);
    if (latex_) return sign + "\\frac{" + join(num) + "}{" + join(den) + "}";
    std::string d = join(den);
    if (den.size() > 1) d = "(" + d + ")";
    return sign + join(num) + "/" + d;
  }

  bool latex_;
};

}  // namespace

std::string Expr::str() const { return Printer(false).print(*this); }
std::string Expr::latex() const { return Printer(true).print(*this); }

}  // namespace lie_thomas
