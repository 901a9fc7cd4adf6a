#include "liethomas/expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lie_thomas {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t compute_hash(const Node& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  h = mix(h, std::hash<Rational>{}(n.value));
  h = mix(h, std::hash<std::string>{}(n.name));
  h = mix(h, static_cast<std::size_t>(n.exponent));
  for (int d : n.derivs) h = mix(h, static_cast<std::size_t>(d));
  for (const auto& op : n.ops) h = mix(h, op.hash());
  return h;
}

Expr make(Node n) {
  n.hash = compute_hash(n);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

const Expr& zero_expr() {
  static const Expr z = [] {
    Node n;
    n.kind = NodeKind::Constant;
    return make(std::move(n));
  }();
  return z;
}

int kind_rank(NodeKind k) {
  switch (k) {
    case NodeKind::Constant: return 0;
    case NodeKind::Symbol: return 1;
    case NodeKind::Function: return 2;
    case NodeKind::Power: return 3;
    case NodeKind::Product: return 4;
    case NodeKind::Exp: return 5;
    case NodeKind::Log: return 6;
    case NodeKind::Tan: return 7;
    case NodeKind::Arctan: return 8;
    case NodeKind::Sum: return 9;
  }
  return 10;
}

int symbol_rank(const Node& n) {
  switch (n.symbol_kind) {
    case SymbolKind::Variable: return 1;
    case SymbolKind::Parameter: return 0;
    case SymbolKind::Jet: return 2;
  }
  return 3;
}

std::strong_ordering compare_ops(std::span<const Expr> a, std::span<const Expr> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

// Multiplies every term of a sum by r; plain product otherwise.
Expr scale(const Expr& e, const Rational& r) {
  if (r.is_one()) return e;
  if (e.kind() != NodeKind::Sum) return mul({constant(r), e});
  std::vector<Expr> terms;
  terms.reserve(e.operands().size() + 1);
  for (const auto& t : e.operands()) terms.push_back(mul({constant(r), t}));
  terms.push_back(constant(e.value() * r));
  return add(std::move(terms));
}

// Splits a term into rational coefficient and coefficient-free remainder.
std::pair<Rational, Expr> split_coefficient(const Expr& t) {
  if (t.kind() != NodeKind::Product) return {Rational(1), t};
  auto ops = t.operands();
  if (ops.size() == 1) return {t.value(), ops[0]};
  Node n;
  n.kind = NodeKind::Product;
  n.value = Rational(1);
  n.ops.assign(ops.begin(), ops.end());
  return {t.value(), make(std::move(n))};
}

Expr with_coefficient(const Rational& c, const Expr& rest) {
  if (c.is_one()) return rest;
  Node n;
  n.kind = NodeKind::Product;
  n.value = c;
  if (rest.kind() == NodeKind::Product) {
    n.ops.assign(rest.operands().begin(), rest.operands().end());
    n.value = c * rest.value();
  } else {
    n.ops.push_back(rest);
  }
  return make(std::move(n));
}

Expr map_children(const Expr& e, const std::function<Expr(const Expr&)>& fn) {
  switch (e.kind()) {
    case NodeKind::Constant:
    case NodeKind::Symbol:
      return e;
    case NodeKind::Function: {
      std::vector<Expr> args;
      for (const auto& a : e.operands()) args.push_back(fn(a));
      return function(e.name(), e.formals(), std::move(args),
                      std::vector<int>(e.derivatives().begin(), e.derivatives().end()));
    }
    case NodeKind::Sum: {
      std::vector<Expr> terms{constant(e.value())};
      for (const auto& t : e.operands()) terms.push_back(fn(t));
      return add(std::move(terms));
    }
    case NodeKind::Product: {
      std::vector<Expr> factors{constant(e.value())};
      for (const auto& f : e.operands()) factors.push_back(fn(f));
      return mul(std::move(factors));
    }
    case NodeKind::Power: return pow(fn(e.operands()[0]), e.exponent());
    case NodeKind::Exp: return exp(fn(e.operands()[0]));
    case NodeKind::Log: return log(fn(e.operands()[0]));
    case NodeKind::Tan: return tan(fn(e.operands()[0]));
    case NodeKind::Arctan: return arctan(fn(e.operands()[0]));
  }
  return e;
}

}  // namespace

// ---- Expr accessors ----

Expr::Expr() : node_(zero_expr().node_) {}
Expr::Expr(const Rational& r) : Expr(constant(r)) {}

NodeKind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const { return node_->kind == NodeKind::Constant && node_->value.is_zero(); }
bool Expr::is_one() const { return node_->kind == NodeKind::Constant && node_->value.is_one(); }
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
SymbolKind Expr::symbol_kind() const { return node_->symbol_kind; }
std::span<const Expr> Expr::operands() const { return node_->ops; }
int Expr::exponent() const { return node_->exponent; }
const std::vector<std::string>& Expr::formals() const { return node_->formals; }
std::span<const int> Expr::derivatives() const { return node_->derivs; }
std::size_t Expr::hash() const { return node_->hash; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (auto c = kind_rank(x.kind) <=> kind_rank(y.kind); c != 0) return c;
  switch (x.kind) {
    case NodeKind::Constant: return x.value <=> y.value;
    case NodeKind::Symbol: {
      if (auto c = symbol_rank(x) <=> symbol_rank(y); c != 0) return c;
      if (x.symbol_kind == SymbolKind::Jet) {
        int ox = x.derivs[0] + x.derivs[1];
        int oy = y.derivs[0] + y.derivs[1];
        if (auto c = ox <=> oy; c != 0) return c;
        return y.derivs[0] <=> x.derivs[0];
      }
      if (auto c = x.name.size() <=> y.name.size(); c != 0) return c;
      return x.name <=> y.name;
    }
    case NodeKind::Function: {
      if (auto c = x.name <=> y.name; c != 0) return c;
      int ox = 0, oy = 0;
      for (int d : x.derivs) ox += d;
      for (int d : y.derivs) oy += d;
      if (auto c = ox <=> oy; c != 0) return c;
      if (auto c = y.derivs <=> x.derivs; c != 0) return c;
      return compare_ops(x.ops, y.ops);
    }
    case NodeKind::Power: {
      if (auto c = x.ops[0] <=> y.ops[0]; c != 0) return c;
      return x.exponent <=> y.exponent;
    }
    case NodeKind::Product: {
      if (auto c = compare_ops(x.ops, y.ops); c != 0) return c;
      return x.value <=> y.value;
    }
    case NodeKind::Sum: {
      if (auto c = compare_ops(x.ops, y.ops); c != 0) return c;
      return x.value <=> y.value;
    }
    default:
      return x.ops[0] <=> y.ops[0];
  }
}

// ---- construction ----

Expr constant(const Rational& r) {
  if (r.is_zero()) return zero_expr();
  Node n;
  n.kind = NodeKind::Constant;
  n.value = r;
  return make(std::move(n));
}

Expr symbol(const std::string& name, SymbolKind kind) {
  Node n;
  n.kind = NodeKind::Symbol;
  n.name = name;
  n.symbol_kind = kind;
  if (kind == SymbolKind::Jet) {
    if (name.size() < 3 || name.rfind("u_", 0) != 0) throw SymbolicError("bad jet name: " + name);
    int nx = 0, ny = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
      if (name[i] == 'x') ++nx;
      else if (name[i] == 'y') ++ny;
      else throw SymbolicError("bad jet name: " + name);
    }
    n.derivs = {nx, ny};
    n.name = jet_name(nx, ny);
  }
  return make(std::move(n));
}

Expr parameter(const std::string& name) { return symbol(name, SymbolKind::Parameter); }
Expr variable(const std::string& name) { return symbol(name, SymbolKind::Variable); }

std::string jet_name(int nx, int ny) {
  if (nx == 0 && ny == 0) return "u";
  return "u_" + std::string(static_cast<std::size_t>(nx), 'x') + std::string(static_cast<std::size_t>(ny), 'y');
}

Expr jet(int nx, int ny) {
  if (nx < 0 || ny < 0) throw SymbolicError("negative jet order");
  if (nx == 0 && ny == 0) return u_var();
  return symbol(jet_name(nx, ny), SymbolKind::Jet);
}

Expr x_var() {
  static const Expr v = variable("x");
  return v;
}
Expr y_var() {
  static const Expr v = variable("y");
  return v;
}
Expr u_var() {
  static const Expr v = variable("u");
  return v;
}

Expr function(const std::string& name, std::vector<std::string> formals, std::vector<Expr> args,
              std::vector<int> derivs) {
  if (args.size() != formals.size())
    throw SymbolicError("function " + name + " expects " + std::to_string(formals.size()) + " arguments");
  if (derivs.empty()) derivs.assign(formals.size(), 0);
  if (derivs.size() != formals.size()) throw SymbolicError("derivative index size mismatch for " + name);
  Node n;
  n.kind = NodeKind::Function;
  n.name = name;
  n.formals = std::move(formals);
  n.ops = std::move(args);
  n.derivs = std::move(derivs);
  return make(std::move(n));
}

Expr function(const std::string& name, std::vector<std::string> formals) {
  std::vector<Expr> args;
  for (const auto& f : formals) args.push_back(variable(f));
  return function(name, std::move(formals), std::move(args));
}

Expr add(std::vector<Expr> terms) {
  Rational offset(0);
  std::map<Expr, Rational, ExprLess> collected;
  std::function<void(const Expr&)> accumulate = [&](const Expr& t) {
    switch (t.kind()) {
      case NodeKind::Constant:
        offset += t.value();
        break;
      case NodeKind::Sum:
        offset += t.value();
        for (const auto& op : t.operands()) accumulate(op);
        break;
      default: {
        auto [c, rest] = split_coefficient(t);
        collected[rest] += c;
      }
    }
  };
  for (const auto& t : terms) accumulate(t);

  std::vector<Expr> ops;
  for (const auto& [rest, c] : collected) {
    if (!c.is_zero()) ops.push_back(with_coefficient(c, rest));
  }
  if (ops.empty()) return constant(offset);
  if (ops.size() == 1 && offset.is_zero()) return ops.front();
  Node n;
  n.kind = NodeKind::Sum;
  n.value = offset;
  n.ops = std::move(ops);
  return make(std::move(n));
}

Expr mul(std::vector<Expr> factors) {
  Rational coef(1);
  std::map<Expr, int, ExprLess> powers;
  std::vector<Expr> exp_args;
  std::function<void(const Expr&, int)> accumulate = [&](const Expr& f, int k) {
    switch (f.kind()) {
      case NodeKind::Constant:
        if (f.value().is_zero() && k < 0) throw SymbolicError("division by zero");
        coef *= f.value().pow(k);
        break;
      case NodeKind::Product:
        coef *= f.value().pow(k);
        for (const auto& op : f.operands()) accumulate(op, k);
        break;
      case NodeKind::Power:
        accumulate(f.operands()[0], f.exponent() * k);
        break;
      case NodeKind::Exp:
        exp_args.push_back(scale(f.operands()[0], Rational(k)));
        break;
      default:
        powers[f] += k;
    }
  };
  for (const auto& f : factors) {
    accumulate(f, 1);
    if (coef.is_zero()) return zero_expr();
  }
  if (!exp_args.empty()) {
    Expr merged = exp(add(std::move(exp_args)));
    if (merged.kind() == NodeKind::Exp) powers[merged] += 1;
    else accumulate(merged, 1);
  }
  if (coef.is_zero()) return zero_expr();

  std::vector<Expr> ops;
  for (const auto& [base, k] : powers) {
    if (k == 0) continue;
    if (k == 1) {
      ops.push_back(base);
    } else {
      Node n;
      n.kind = NodeKind::Power;
      n.ops = {base};
      n.exponent = k;
      ops.push_back(make(std::move(n)));
    }
  }
  if (ops.empty()) return constant(coef);
  if (ops.size() == 1 && coef.is_one()) return ops.front();
  Node n;
  n.kind = NodeKind::Product;
  n.value = coef;
  n.ops = std::move(ops);
  return make(std::move(n));
}

Expr pow(const Expr& base, int k) {
  if (k == 0) return constant(Rational(1));
  if (k == 1) return base;
  switch (base.kind()) {
    case NodeKind::Constant:
      if (base.value().is_zero() && k < 0) throw SymbolicError("division by zero");
      return constant(base.value().pow(k));
    case NodeKind::Product:
    case NodeKind::Power:
    case NodeKind::Exp: {
      // mul() distributes the exponent over factors and merges exponentials.
      Node n;
      n.kind = NodeKind::Power;
      n.ops = {base};
      n.exponent = k;
      return mul({make(std::move(n))});
    }
    default: {
      Node n;
      n.kind = NodeKind::Power;
      n.ops = {base};
      n.exponent = k;
      return make(std::move(n));
    }
  }
}

Expr exp(const Expr& arg) {
  if (arg.is_zero()) return constant(Rational(1));
  if (arg.kind() == NodeKind::Log) return arg.operands()[0];
  Node n;
  n.kind = NodeKind::Exp;
  n.ops = {arg};
  return make(std::move(n));
}

Expr log(const Expr& arg) {
  if (arg.is_one()) return zero_expr();
  if (arg.is_zero()) throw SymbolicError("log(0)");
  if (arg.kind() == NodeKind::Exp) return arg.operands()[0];
  Node n;
  n.kind = NodeKind::Log;
  n.ops = {arg};
  return make(std::move(n));
}

Expr tan(const Expr& arg) {
  if (arg.is_zero()) return zero_expr();
  Node n;
  n.kind = NodeKind::Tan;
  n.ops = {arg};
  return make(std::move(n));
}

Expr arctan(const Expr& arg) {
  if (arg.is_zero()) return zero_expr();
  if (arg.kind() == NodeKind::Tan) return arg.operands()[0];
  Node n;
  n.kind = NodeKind::Arctan;
  n.ops = {arg};
  return make(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return add({a, -b}); }
Expr operator-(const Expr& a) { return mul({constant(Rational(-1)), a}); }
Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw SymbolicError("division by zero");
  return mul({a, pow(b, -1)});
}

// ---- calculus ----

Expr differentiate(const Expr& e, const Expr& var) {
  if (var.kind() != NodeKind::Symbol) throw SymbolicError("can only differentiate with respect to a symbol");
  switch (e.kind()) {
    case NodeKind::Constant:
      return zero_expr();
    case NodeKind::Symbol:
      return constant(Rational(e.name() == var.name() ? 1 : 0));
    case NodeKind::Function: {
      std::vector<Expr> terms;
      auto args = e.operands();
      for (std::size_t i = 0; i < args.size(); ++i) {
        Expr da = differentiate(args[i], var);
        if (da.is_zero()) continue;
        std::vector<int> d(e.derivatives().begin(), e.derivatives().end());
        d[i] += 1;
        terms.push_back(function(e.name(), e.formals(), std::vector<Expr>(args.begin(), args.end()), d) * da);
      }
      return add(std::move(terms));
    }
    case NodeKind::Sum: {
      std::vector<Expr> terms;
      for (const auto& t : e.operands()) terms.push_back(differentiate(t, var));
      return add(std::move(terms));
    }
    case NodeKind::Product: {
      auto ops = e.operands();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        Expr di = differentiate(ops[i], var);
        if (di.is_zero()) continue;
        std::vector<Expr> factors{constant(e.value()), di};
        for (std::size_t j = 0; j < ops.size(); ++j) {
          if (j != i) factors.push_back(ops[j]);
        }
        terms.push_back(mul(std::move(factors)));
      }
      return add(std::move(terms));
    }
    case NodeKind::Power: {
      const Expr& b = e.operands()[0];
      Expr db = differentiate(b, var);
      if (db.is_zero()) return zero_expr();
      return mul({constant(Rational(e.exponent())), pow(b, e.exponent() - 1), db});
    }
    case NodeKind::Exp: {
      Expr da = differentiate(e.operands()[0], var);
      return da.is_zero() ? zero_expr() : e * da;
    }
    case NodeKind::Log: {
      Expr da = differentiate(e.operands()[0], var);
      return da.is_zero() ? zero_expr() : da * pow(e.operands()[0], -1);
    }
    case NodeKind::Tan: {
      Expr da = differentiate(e.operands()[0], var);
      return da.is_zero() ? zero_expr() : (constant(Rational(1)) + pow(e, 2)) * da;
    }
    case NodeKind::Arctan: {
      const Expr& a = e.operands()[0];
      Expr da = differentiate(a, var);
      return da.is_zero() ? zero_expr() : da * pow(constant(Rational(1)) + pow(a, 2), -1);
    }
  }
  return zero_expr();
}

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  if (e.kind() == NodeKind::Symbol) {
    auto it = bindings.find(e.name());
    return it == bindings.end() ? e : it->second;
  }
  return map_children(e, [&](const Expr& c) { return substitute(c, bindings); });
}

Expr substitute_function(const Expr& e, const std::string& name, const Expr& body) {
  if (e.kind() == NodeKind::Function && e.name() == name) {
    Expr result = body;
    const auto& formals = e.formals();
    for (std::size_t i = 0; i < formals.size(); ++i) {
      Expr var = variable(formals[i]);
      for (int d = 0; d < e.derivatives()[i]; ++d) result = differentiate(result, var);
    }
    Bindings args;
    for (std::size_t i = 0; i < formals.size(); ++i)
      args[formals[i]] = substitute_function(e.operands()[i], name, body);
    return substitute(result, args);
  }
  return map_children(e, [&](const Expr& c) { return substitute_function(c, name, body); });
}

// ---- expansion ----

namespace {

std::pair<Expr, Rational> monic(const Expr& sum) {
  const Expr& lead = sum.operands().front();
  Rational lc = lead.kind() == NodeKind::Product ? lead.value() : Rational(1);
  return {scale(sum, lc.reciprocal()), lc};
}

Expr distribute(const Expr& a, const Expr& b) {
  auto ta = terms_of(a);
  auto tb = terms_of(b);
  std::vector<Expr> out;
  out.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    // a term already carrying b^-n absorbs b instead of being distributed
    bool cancels = false;
    if (b.kind() == NodeKind::Sum) {
      auto factors = x.kind() == NodeKind::Product ? x.operands() : std::span<const Expr>(&x, 1);
      for (const auto& f : factors) {
        if (f.kind() == NodeKind::Power && f.exponent() < 0 && f.operands()[0] == b) cancels = true;
      }
    }
    if (cancels) {
      out.push_back(mul({x, b}));
      continue;
    }
    for (const auto& y : tb) out.push_back(mul({x, y}));
  }
  return add(std::move(out));
}

Expr expand_product(const Expr& e) {
  Rational coef(1);
  std::vector<std::pair<Expr, int>> queue{{e, 1}};
  std::vector<Expr> atoms;
  std::map<Expr, int, ExprLess> sum_powers;
  while (!queue.empty()) {
    auto [f, k] = queue.back();
    queue.pop_back();
    switch (f.kind()) {
      case NodeKind::Constant:
        coef *= f.value().pow(k);
        break;
      case NodeKind::Product:
        coef *= f.value().pow(k);
        for (const auto& op : f.operands()) queue.emplace_back(op, k);
        break;
      case NodeKind::Power:
        queue.emplace_back(f.operands()[0], f.exponent() * k);
        break;
      case NodeKind::Sum: {
        Expr es = expand(f);
        if (es.kind() != NodeKind::Sum) {
          queue.emplace_back(es, k);
          break;
        }
        auto [m, lc] = monic(es);
        coef *= lc.pow(k);
        sum_powers[m] += k;
        break;
      }
      default: {
        Expr ea = expand(f);
        if (ea.kind() == NodeKind::Sum || ea.kind() == NodeKind::Product || ea.kind() == NodeKind::Power ||
            ea.kind() == NodeKind::Constant) {
          queue.emplace_back(ea, k);
        } else {
          atoms.push_back(pow(ea, k));
        }
      }
    }
  }
  std::vector<Expr> factors{constant(coef)};
  std::vector<Expr> positive_sums;
  for (const auto& [m, k] : sum_powers) {
    if (k < 0) factors.push_back(pow(m, k));
    for (int i = 0; i < k; ++i) positive_sums.push_back(m);
  }
  for (auto& a : atoms) factors.push_back(std::move(a));
  Expr result = mul(std::move(factors));
  // mul() may have merged exponentials into something that needs expansion.
  if (result.kind() == NodeKind::Product) {
    for (const auto& op : result.operands()) {
      if (op.kind() == NodeKind::Sum) return expand(result);
    }
  } else if (result.kind() == NodeKind::Power && result.exponent() > 0 &&
             result.operands()[0].kind() == NodeKind::Sum) {
    return expand(result);
  }
  // rational sums first so their denominators can absorb the polynomial ones
  auto has_denominator = [](const Expr& sum) {
    for (const auto& t : sum.operands()) {
      auto factors = t.kind() == NodeKind::Product ? t.operands() : std::span<const Expr>(&t, 1);
      for (const auto& f : factors) {
        if (f.kind() == NodeKind::Power && f.exponent() < 0 && f.operands()[0].kind() == NodeKind::Sum) return true;
      }
    }
    return false;
  };
  std::stable_partition(positive_sums.begin(), positive_sums.end(), has_denominator);
  for (const auto& s : positive_sums) result = distribute(result, s);
  return result;
}

}  // namespace

std::vector<Expr> terms_of(const Expr& e) {
  if (e.kind() != NodeKind::Sum) return {e};
  std::vector<Expr> out(e.operands().begin(), e.operands().end());
  if (!e.value().is_zero()) out.push_back(constant(e.value()));
  return out;
}

Expr expand(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Constant:
    case NodeKind::Symbol:
      return e;
    case NodeKind::Function:
    case NodeKind::Exp:
    case NodeKind::Log:
    case NodeKind::Tan:
    case NodeKind::Arctan:
      return map_children(e, [](const Expr& c) { return expand(c); });
    case NodeKind::Sum: {
      std::vector<Expr> terms{constant(e.value())};
      for (const auto& t : e.operands()) terms.push_back(expand(t));
      return add(std::move(terms));
    }
    case NodeKind::Product:
    case NodeKind::Power:
      return expand_product(e);
  }
  return e;
}

bool is_zero(const Expr& e) {
  Expr r = expand(e);
  for (int round = 0; round < 8; ++round) {
    if (r.is_zero()) return true;
    std::map<Expr, int, ExprLess> denominators;
    for (const auto& t : terms_of(r)) {
      std::vector<Expr> factors =
          t.kind() == NodeKind::Product ? std::vector<Expr>(t.operands().begin(), t.operands().end())
                                        : std::vector<Expr>{t};
      for (const auto& f : factors) {
        if (f.kind() == NodeKind::Power && f.exponent() < 0 && f.operands()[0].kind() == NodeKind::Sum) {
          int& slot = denominators[f.operands()[0]];
          slot = std::max(slot, -f.exponent());
        }
      }
    }
    if (denominators.empty()) return false;
    std::vector<Expr> factors{r};
    for (const auto& [base, k] : denominators) factors.push_back(pow(base, k));
    r = expand(mul(std::move(factors)));
  }
  return r.is_zero();
}

Expr coefficient_of(const Expr& e, const Expr& atom, int power) {
  std::vector<Expr> out;
  for (const auto& t : terms_of(expand(e))) {
    std::vector<Expr> factors =
        t.kind() == NodeKind::Product ? std::vector<Expr>(t.operands().begin(), t.operands().end())
                                      : std::vector<Expr>{t};
    int found = 0;
    std::vector<Expr> rest{t.kind() == NodeKind::Product ? constant(t.value()) : constant(Rational(1))};
    for (const auto& f : factors) {
      if (f == atom) {
        found += 1;
      } else if (f.kind() == NodeKind::Power && f.operands()[0] == atom) {
        found += f.exponent();
      } else {
        rest.push_back(f);
      }
    }
    if (found == power) out.push_back(mul(std::move(rest)));
  }
  return add(std::move(out));
}

bool depends_on(const Expr& e, const std::string& symbol_name) {
  if (e.kind() == NodeKind::Symbol) return e.name() == symbol_name;
  for (const auto& op : e.operands()) {
    if (depends_on(op, symbol_name)) return true;
  }
  return false;
}

bool contains_jet(const Expr& e) { return max_jet_order(e) > 0; }

int max_jet_order(const Expr& e) {
  if (e.kind() == NodeKind::Symbol) {
    return e.symbol_kind() == SymbolKind::Jet ? e.derivatives()[0] + e.derivatives()[1] : 0;
  }
  int best = 0;
  for (const auto& op : e.operands()) best = std::max(best, max_jet_order(op));
  return best;
}

double evaluate(const Expr& e, const NumericBindings& bindings) {
  switch (e.kind()) {
    case NodeKind::Constant:
      return e.value().to_double();
    case NodeKind::Symbol: {
      auto it = bindings.find(e.name());
      if (it == bindings.end()) throw SymbolicError("no numeric value bound for '" + e.name() + "'");
      return it->second;
    }
    case NodeKind::Function:
      throw SymbolicError("cannot evaluate unknown function '" + e.str() + "'");
    case NodeKind::Sum: {
      double s = e.value().to_double();
      for (const auto& t : e.operands()) s += evaluate(t, bindings);
      return s;
    }
    case NodeKind::Product: {
      double p = e.value().to_double();
      for (const auto& f : e.operands()) p *= evaluate(f, bindings);
      return p;
    }
    case NodeKind::Power:
      return std::pow(evaluate(e.operands()[0], bindings), e.exponent());
    case NodeKind::Exp:
      return std::exp(evaluate(e.operands()[0], bindings));
    case NodeKind::Log: {
      double a = evaluate(e.operands()[0], bindings);
      if (a <= 0.0) throw SymbolicError("log of non-positive value");
      return std::log(a);
    }
    case NodeKind::Tan:
      return std::tan(evaluate(e.operands()[0], bindings));
    case NodeKind::Arctan:
      return std::atan(evaluate(e.operands()[0], bindings));
  }
  return 0.0;
}

}  // namespace lie_thomas
