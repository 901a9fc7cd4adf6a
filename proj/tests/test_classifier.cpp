#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "liethomas/classifier.hpp"

using namespace lie_thomas;

namespace {

Rational random_rational(std::mt19937_64& rng, bool allow_zero_bias) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), coin(0, 3);
  if (allow_zero_bias && coin(rng) == 0) return Rational(0);
  return Rational(num(rng), den(rng));
}

Coords random_coords(std::mt19937_64& rng) {
  return {random_rational(rng, true), random_rational(rng, true), random_rational(rng, true), random_rational(rng, true)};
}

// The case tree written out directly on the input coordinates.
std::vector<CaseTag> firing_tags(const Coords& v, const RationalParams& p) {
  auto [a1, a2, a3, a4] = v;
  std::vector<CaseTag> fired;
  auto fire = [&](bool cond, CaseTag t) {
    if (cond) fired.push_back(t);
  };
  const bool all_zero = a1.is_zero() && a2.is_zero() && a3.is_zero() && a4.is_zero();
  fire(all_zero, CaseTag::Zero);
  fire(!a4.is_zero(), CaseTag::Case1);
  const bool c2 = a4.is_zero() && !a3.is_zero();
  Rational b1 = c2 ? a1 / a3 : Rational(0), b2 = c2 ? a2 / a3 : Rational(0);
  Rational disc = (p.alpha * b2 - p.beta * b1 + p.gamma) * (p.alpha * b2 - p.beta * b1 + p.gamma) +
                  Rational(4) * p.gamma * p.beta * b1;
  fire(c2 && !b1.is_zero() && !b2.is_zero() && disc.sign() >= 0, CaseTag::Case2_1a);
  fire(c2 && !b1.is_zero() && !b2.is_zero() && disc.sign() < 0, CaseTag::Case2_1b);
  fire(c2 && b2.is_zero() && !b1.is_zero() && b1 * p.beta + p.gamma != Rational(0), CaseTag::Case2_2);
  fire(c2 && b1.is_zero() && !b2.is_zero() && b2 * p.alpha + p.gamma != Rational(0), CaseTag::Case2_2);
  fire(c2 && b2.is_zero() && !b1.is_zero() && b1 * p.beta + p.gamma == Rational(0), CaseTag::Case2_3);
  fire(c2 && b1.is_zero() && !b2.is_zero() && b2 * p.alpha + p.gamma == Rational(0), CaseTag::Case2_3);
  fire(c2 && b1.is_zero() && b2.is_zero(), CaseTag::Case2_4);
  const bool c3 = a4.is_zero() && a3.is_zero() && !all_zero;
  fire(c3 && !a1.is_zero() && !a2.is_zero() && p.beta * a1 == p.alpha * a2, CaseTag::Case3_1a);
  fire(c3 && !a1.is_zero() && !a2.is_zero() && p.beta * a1 != p.alpha * a2, CaseTag::Case3_1b);
  fire(c3 && (a1.is_zero() || a2.is_zero()), CaseTag::Case3_2);
  return fired;
}

Coords C(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }

}  // namespace

TEST_CASE("examples") {
  auto p = ThomasParams::numeric(1, 1, 1);
  CanonicalCase c = classify(C(0, 0, 0, 1), p);
  CHECK(c.tag == CaseTag::Case1);
  CHECK(c.word.empty());

  c = classify(C(2, 3, 5, 1), ThomasParams::numeric(1, 2, 1));
  CHECK(c.tag == CaseTag::Case1);
  REQUIRE(c.word.size() == 1);
  CHECK(c.word[0].generator == 1);
  CHECK(c.word[0].value == Rational(5, 2));
  CHECK(c.canonical[2].is_zero());
  CHECK(c.canonical[3] == Rational(1));
  // Ad(exp(eps v1)) v4 = v4 + eps*gamma*v1
  CHECK(c.canonical[0] == Rational(2) + Rational(5, 2));

  CHECK(classify(C(1, 1, 0, 0), p).tag == CaseTag::Case3_1a);
  CHECK(classify(C(0, 1, 0, 0), p).tag == CaseTag::Case3_2);
  CHECK_FALSE(classify(C(0, 1, 0, 0), p).mirrored);
  CHECK(classify(C(1, 0, 0, 0), p).mirrored);
  CHECK(classify(C(1, 3, 0, 0), p).tag == CaseTag::Case3_1b);
  CHECK(classify(C(1, 2, 1, 0), p).tag == CaseTag::Case2_1a);
  CHECK(classify(C(-1, -1, 1, 0), p).tag == CaseTag::Case2_1b);
  CHECK(classify(C(1, 0, 1, 0), p).tag == CaseTag::Case2_2);
  CHECK(classify(C(-1, 0, 1, 0), p).tag == CaseTag::Case2_3);
  CHECK(classify(C(0, 0, 3, 0), p).tag == CaseTag::Case2_4);
  CHECK(classify(C(0, 0, 3, 0), p).canonical == C(0, 0, 1, 0));
  CHECK(classify(C(0, 2, 1, 0), p).mirrored);
}

TEST_CASE("errors") {
  auto p = ThomasParams::numeric(1, 1, 1);
  CHECK_THROWS_AS(classify(C(0, 0, 0, 0), p), ClassificationError);
  CHECK(tag_of(C(0, 0, 0, 0), p) == CaseTag::Zero);
  CHECK_THROWS_AS(classify(C(1, 0, 1, 1), ThomasParams::numeric(1, 0, 1)), ClassificationError);
  CHECK(classify(C(1, 0, 0, 1), ThomasParams::numeric(1, 0, 1)).tag == CaseTag::Case1);
  CHECK_THROWS_AS(classify(AlgebraElement::basis(1) + AlgebraElement::from_g(x_var()), p), ClassificationError);
  CHECK_THROWS_AS(classify(AlgebraElement::basis(1), ThomasParams::symbolic()), ClassificationError);
}

TEST_CASE("case tags parse and print") {
  for (CaseTag t : {CaseTag::Case1, CaseTag::Case2_1a, CaseTag::Case2_1b, CaseTag::Case2_2, CaseTag::Case2_3,
                    CaseTag::Case2_4, CaseTag::Case3_1a, CaseTag::Case3_1b, CaseTag::Case3_2}) {
    CHECK(parse_case_tag(to_string(t)) == t);
  }
  CHECK(parse_case_tag("2.1a") == CaseTag::Case2_1a);
  CHECK(parse_case_tag("1") == CaseTag::Case1);
  CHECK_THROWS(parse_case_tag("Case7"));
}

TEST_CASE("rational adjoint steps agree with the symbolic adjoint") {
  auto p = ThomasParams::numeric(Rational(2), Rational(3, 2), Rational(1, 2));
  const RationalParams rp = RationalParams::from(p);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    Coords v = random_coords(rng);
    AlgebraElement w = AlgebraElement::coords(v[0], v[1], v[2], v[3]);
    for (int i = 1; i <= 4; ++i) {
      Rational value = i == 4 ? Rational(1 + t % 5, 1 + t % 3) : random_rational(rng, false);
      Coords r = adjoint_rational({i, value}, v, rp);
      if (i < 4) {
        AlgebraElement a = adjoint(i, constant(value), w, p);
        for (int k = 0; k < 4; ++k) CHECK(expand(a.a[k]) == constant(r[k]));
      } else {
        double eps = -std::log(value.to_double()) / rp.gamma.to_double();
        AlgebraElement a = adjoint(i, parameter("eps"), w, p);
        for (int k = 0; k < 4; ++k)
          CHECK(evaluate(a.a[k], {{"eps", eps}}) == doctest::Approx(r[k].to_double()).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("coverage and word replay on random vectors") {
  std::mt19937_64 rng(2024);
  const std::vector<RationalParams> params{{1, 1, 1}, {2, Rational(1, 2), 3}, {Rational(-1, 3), 2, 1}};
  int counts[10] = {};
  auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < 3000; ++t) {
    const RationalParams& rp = params[t % params.size()];
    auto p = ThomasParams::numeric(rp.alpha, rp.beta, rp.gamma);
    Coords v = random_coords(rng);
    auto fired = firing_tags(v, rp);
    REQUIRE(fired.size() == 1);
    CaseTag tag = tag_of(v, p);
    CHECK(tag == fired[0]);
    ++counts[static_cast<int>(tag)];
    if (tag == CaseTag::Zero) continue;
    CanonicalCase c = classify(v, p);
    CHECK(apply_word(v, c.word, rp) == c.canonical);
    CHECK(classify(v, p).word.size() == c.word.size());
    switch (tag) {
      case CaseTag::Case1:
        CHECK(c.canonical[3] == Rational(1));
        CHECK(c.canonical[2].is_zero());
        break;
      case CaseTag::Case3_1a:
      case CaseTag::Case3_1b:
        CHECK(c.canonical[0] == Rational(1));
        break;
      case CaseTag::Case3_2:
        CHECK(c.canonical[c.mirrored ? 0 : 1] == Rational(1));
        break;
      default:
        CHECK(c.canonical[2] == Rational(1));
        CHECK(c.canonical[3].is_zero());
    }
  }
  for (int k = 0; k < 10; ++k) {
    CAPTURE(k);
    if (k != static_cast<int>(CaseTag::Case2_3) && k != static_cast<int>(CaseTag::Case3_1a)) CHECK(counts[k] > 0);
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(10));
}

TEST_CASE("orbit invariance") {
  auto p = ThomasParams::numeric(1, 1, 1);
  CHECK(tag_of(apply_word(C(1, 1, 0, 1), {{3, Rational(3, 10)}}, RationalParams::from(p)), p) == CaseTag::Case1);
  CHECK(tag_of(apply_word(C(1, 1, 1, 0), {{3, Rational(7)}}, RationalParams::from(p)), p) ==
        tag_of(C(1, 1, 1, 0), p));
  Coords moved = apply_word(C(1, 0, 0, 0), {{4, Rational(1, 2)}}, RationalParams::from(p));
  CHECK_FALSE(moved[2].is_zero());
  CHECK(tag_of(moved, p) != tag_of(C(1, 0, 0, 0), p));
  OrbitCheckReport excluded = orbit_invariance_check(C(1, 0, 0, 0), p, 200, 3);
  CHECK(excluded.passed());
  CHECK(excluded.excluded > 0);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    Coords v = random_coords(rng);
    if (tag_of(v, p) == CaseTag::Zero) continue;
    OrbitCheckReport r = orbit_invariance_check(v, p, 20, t);
    CAPTURE(to_string(tag_of(v, p)));
    CHECK(r.passed());
    CHECK(r.compared + r.excluded == r.trials);
  }
}
