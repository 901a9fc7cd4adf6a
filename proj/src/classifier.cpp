#include "liethomas/classifier.hpp"

#include <random>

namespace lie_thomas {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2_1a: return "Case2_1a";
    case CaseTag::Case2_1b: return "Case2_1b";
    case CaseTag::Case2_2: return "Case2_2";
    case CaseTag::Case2_3: return "Case2_3";
    case CaseTag::Case2_4: return "Case2_4";
    case CaseTag::Case3_1a: return "Case3_1a";
    case CaseTag::Case3_1b: return "Case3_1b";
    case CaseTag::Case3_2: return "Case3_2";
    case CaseTag::Zero: return "Zero";
  }
  return "?";
}

CaseTag parse_case_tag(const std::string& text) {
  std::string t = text;
  if (t.rfind("Case", 0) == 0) t = t.substr(4);
  for (auto& c : t) {
    if (c == '_') c = '.';
  }
  static const std::pair<const char*, CaseTag> table[] = {
      {"1", CaseTag::Case1},       {"2.1a", CaseTag::Case2_1a}, {"2.1b", CaseTag::Case2_1b},
      {"2.2", CaseTag::Case2_2},   {"2.3", CaseTag::Case2_3},   {"2.4", CaseTag::Case2_4},
      {"3.1a", CaseTag::Case3_1a}, {"3.1b", CaseTag::Case3_1b}, {"3.2", CaseTag::Case3_2},
      {"Zero", CaseTag::Zero}};
  for (const auto& [name, tag] : table) {
    if (t == name) return tag;
  }
  throw std::invalid_argument("unknown case tag '" + text + "'");
}

std::string WordStep::name() const { return generator == 0 ? "scale" : "v" + std::to_string(generator); }

RationalParams RationalParams::from(const ThomasParams& p) {
  if (!p.is_numeric()) throw ClassificationError("classification needs numeric parameters");
  p.validate();
  return {p.alpha.value(), p.beta.value(), p.gamma.value()};
}

Coords adjoint_rational(const WordStep& step, const Coords& v, const RationalParams& p) {
  auto [a1, a2, a3, a4] = v;
  const Rational& e = step.value;
  switch (step.generator) {
    case 0: return {e * a1, e * a2, e * a3, e * a4};
    case 1: return {a1 + e * p.gamma * a4, a2, a3 - e * p.beta * a4, a4};
    case 2: return {a1, a2 - e * p.gamma * a4, a3 + e * p.alpha * a4, a4};
    case 3: return v;
    case 4: {
      // e = e^{-gamma eps}
      const Rational r = e;
      return {a1 * r, a2 / r,
              a3 + a1 * (p.beta / p.gamma) * (Rational(1) - r) - a2 * (p.alpha / p.gamma) * (r.reciprocal() - 1), a4};
    }
    default:
      throw std::out_of_range("word generator must be 0..4");
  }
}

Coords apply_word(const Coords& v, const std::vector<WordStep>& word, const RationalParams& p) {
  Coords c = v;
  for (const auto& s : word) c = adjoint_rational(s, c, p);
  return c;
}

Rational case21_discriminant(const Rational& b1, const Rational& b2, const RationalParams& p) {
  Rational b = p.alpha * b2 - p.beta * b1 + p.gamma;
  return b * b + Rational(4) * p.gamma * p.beta * b1;
}

CanonicalCase classify(const Coords& v, const ThomasParams& params) {
  const RationalParams p = RationalParams::from(params);
  CanonicalCase out;
  out.input = v;
  auto step = [&](int generator, const Rational& value) {
    out.word.push_back({generator, value});
    out.canonical = adjoint_rational(out.word.back(), out.canonical, p);
  };
  auto normalize_by = [&](const Rational& pivot) {
    if (!pivot.is_one()) step(0, pivot.reciprocal());
  };
  out.canonical = v;
  auto [a1, a2, a3, a4] = v;
  if (a1.is_zero() && a2.is_zero() && a3.is_zero() && a4.is_zero())
    throw ClassificationError("cannot classify the zero vector");

  if (!a4.is_zero()) {
    out.tag = CaseTag::Case1;
    normalize_by(a4);
    if (!out.canonical[2].is_zero()) {
      if (p.beta.is_zero()) throw ClassificationError("beta = 0: the v3 coordinate cannot be removed with v1");
      step(1, out.canonical[2] / p.beta);
    }
    return out;
  }
  if (!a3.is_zero()) {
    normalize_by(a3);
    const Rational b1 = out.canonical[0], b2 = out.canonical[1];
    if (!b1.is_zero() && !b2.is_zero()) {
      out.tag = case21_discriminant(b1, b2, p).sign() >= 0 ? CaseTag::Case2_1a : CaseTag::Case2_1b;
    } else if (!b1.is_zero()) {
      out.tag = (!p.beta.is_zero() && b1 == -p.gamma / p.beta) ? CaseTag::Case2_3 : CaseTag::Case2_2;
    } else if (!b2.is_zero()) {
      out.mirrored = true;
      out.tag = (!p.alpha.is_zero() && b2 == -p.gamma / p.alpha) ? CaseTag::Case2_3 : CaseTag::Case2_2;
    } else {
      out.tag = CaseTag::Case2_4;
    }
    return out;
  }
  if (!a1.is_zero() && !a2.is_zero()) {
    normalize_by(a1);
    const Rational b2 = out.canonical[1];
    out.tag = (p.beta - b2 * p.alpha).is_zero() ? CaseTag::Case3_1a : CaseTag::Case3_1b;
  } else if (!a2.is_zero()) {
    normalize_by(a2);
    out.tag = CaseTag::Case3_2;
  } else {
    normalize_by(a1);
    out.mirrored = true;
    out.tag = CaseTag::Case3_2;
  }
  return out;
}

CanonicalCase classify(const AlgebraElement& v, const ThomasParams& p) {
  if (v.g && !is_zero(*v.g)) throw ClassificationError("only span{v1..v4} is classified");
  Coords c;
  for (std::size_t i = 0; i < 4; ++i) {
    Expr e = expand(p.bind(v.a[i]));
    if (!e.is_constant()) throw ClassificationError("coordinates must be rational numbers");
    c[i] = e.value();
  }
  return classify(c, p);
}

CaseTag tag_of(const Coords& v, const ThomasParams& p) {
  for (const auto& a : v) {
    if (!a.is_zero()) return classify(v, p).tag;
  }
  return CaseTag::Zero;
}

OrbitCheckReport orbit_invariance_check(const Coords& v, const ThomasParams& params, int trials, std::uint64_t seed) {
  const RationalParams p = RationalParams::from(params);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(1, 4);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  OrbitCheckReport report;
  const CaseTag before = tag_of(v, params);
  for (int t = 0; t < trials; ++t) {
    ++report.trials;
    WordStep s{gen(rng), Rational(num(rng), den(rng))};
    if (s.generator == 4) {
      s.value = Rational(den(rng), den(rng));
      if (v[3].is_zero()) {
        ++report.excluded;
        continue;
      }
    }
    const Coords moved = adjoint_rational(s, v, p);
    ++report.compared;
    const CaseTag after = tag_of(moved, params);
    if (after != before) {
      report.failures.push_back("Ad(" + s.name() + ", " + s.value.str() + ") moved " + to_string(before) + " to " +
                                to_string(after));
    }
  }
  return report;
}

}  // namespace lie_thomas
