#include "liethomas/jet_polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "liethomas/parser.hpp"

namespace lie_thomas {

namespace {

int higher_weight(const JetMonomial& m) {
  int w = 0;
  for (std::size_t i = 2; i < kJetCount; ++i) w += m[i];
  return w;
}

int degree(const JetMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

int jet_index(int nx, int ny) {
  for (std::size_t i = 0; i < kJetCount; ++i) {
    if (kJetOrders[i][0] == nx && kJetOrders[i][1] == ny) return static_cast<int>(i);
  }
  return -1;
}

bool MonomialLess::operator()(const JetMonomial& a, const JetMonomial& b) const {
  if (int wa = higher_weight(a), wb = higher_weight(b); wa != wb) return wa < wb;
  if (int da = degree(a), db = degree(b); da != db) return da < db;
  return a > b;
}

Expr monomial_expr(const JetMonomial& m) {
  std::vector<Expr> factors;
  for (std::size_t i = 0; i < kJetCount; ++i) {
    if (m[i] > 0) factors.push_back(pow(jet(kJetOrders[i][0], kJetOrders[i][1]), m[i]));
  }
  return mul(std::move(factors));
}

std::string monomial_str(const JetMonomial& m) { return monomial_expr(m).str(); }
std::string monomial_latex(const JetMonomial& m) { return monomial_expr(m).latex(); }

JetMonomial monomial_of(std::string_view text) {
  JetPolynomial p = JetPolynomial::from_expr(parse(text));
  if (p.size() != 1 || !p.terms().begin()->second.is_one())
    throw SymbolicError("not a jet monomial: " + std::string(text));
  return p.terms().begin()->first;
}

JetPolynomial JetPolynomial::from_expr(const Expr& e) {
  std::map<JetMonomial, std::vector<Expr>, MonomialLess> buckets;
  for (const auto& t : terms_of(expand(e))) {
    std::vector<Expr> factors;
    Rational coef(1);
    if (t.kind() == NodeKind::Product) {
      coef = t.value();
      factors.assign(t.operands().begin(), t.operands().end());
    } else {
      factors = {t};
    }
    JetMonomial m{};
    std::vector<Expr> rest{constant(coef)};
    for (const auto& f : factors) {
      const Expr& base = f.kind() == NodeKind::Power ? f.operands()[0] : f;
      int k = f.kind() == NodeKind::Power ? f.exponent() : 1;
      if (base.kind() == NodeKind::Symbol && base.symbol_kind() == SymbolKind::Jet) {
        if (k < 0) throw SymbolicError("negative power of jet variable in " + e.str());
        int idx = jet_index(base.derivatives()[0], base.derivatives()[1]);
        if (idx < 0) throw SymbolicError("jet of unsupported order: " + base.name());
        m[static_cast<std::size_t>(idx)] += k;
      } else {
        if (contains_jet(base)) throw SymbolicError("non-polynomial jet dependence in " + f.str());
        rest.push_back(f);
      }
    }
    buckets[m].push_back(mul(std::move(rest)));
  }
  JetPolynomial p;
  for (auto& [m, parts] : buckets) {
    Expr c = add(std::move(parts));
    if (!lie_thomas::is_zero(c)) p.terms_.emplace(m, c);
  }
  return p;
}

Expr JetPolynomial::to_expr() const {
  std::vector<Expr> terms;
  for (const auto& [m, c] : terms_) terms.push_back(c * monomial_expr(m));
  return add(std::move(terms));
}

Expr JetPolynomial::coefficient(const JetMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Expr() : it->second;
}

bool JetPolynomial::equivalent_to(const JetPolynomial& other) const {
  for (const auto& [m, c] : terms_) {
    if (!equivalent(c, other.coefficient(m))) return false;
  }
  for (const auto& [m, c] : other.terms_) {
    if (!terms_.count(m) && !lie_thomas::is_zero(c)) return false;
  }
  return true;
}

JetPolynomial normalize(const Expr& e) { return JetPolynomial::from_expr(e); }

}  // namespace lie_thomas
