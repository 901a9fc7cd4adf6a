#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "liethomas/determining_system.hpp"
#include "liethomas/lie_algebra.hpp"
#include "liethomas/rational.hpp"

namespace lie_thomas {

enum class CaseTag { Case1, Case2_1a, Case2_1b, Case2_2, Case2_3, Case2_4, Case3_1a, Case3_1b, Case3_2, Zero };

std::string to_string(CaseTag tag);
/// Accepts "Case2_1a" as well as "2.1a".
CaseTag parse_case_tag(const std::string& text);

using Coords = std::array<Rational, 4>;

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One step of an adjoint word. generator 0 rescales the whole vector by
/// `value`; generators 1..3 act by Ad(exp(value v_i)); generator 4 acts by
/// Ad(exp(eps v4)) with value = e^{-gamma eps}.
struct WordStep {
  int generator = 0;
  Rational value;

  std::string name() const;
};

struct CanonicalCase {
  CaseTag tag = CaseTag::Zero;
  Coords input{};
  Coords canonical{};
  std::vector<WordStep> word;
  /// The case tree only covers one of two symmetric sub-branches here; the
  /// representative is its x <-> y mirror (a1 = 0 in 2.2/2.3, a2 = 0 in 3.2).
  bool mirrored = false;
};

struct RationalParams {
  Rational alpha;
  Rational beta;
  Rational gamma;

  static RationalParams from(const ThomasParams& p);
};

Coords adjoint_rational(const WordStep& step, const Coords& v, const RationalParams& p);
Coords apply_word(const Coords& v, const std::vector<WordStep>& word, const RationalParams& p);

/// (alpha b2 - beta b1 + gamma)^2 + 4 gamma beta b1 for v = b1 v1 + b2 v2 + v3.
Rational case21_discriminant(const Rational& b1, const Rational& b2, const RationalParams& p);

CanonicalCase classify(const Coords& v, const ThomasParams& p);
CanonicalCase classify(const AlgebraElement& v, const ThomasParams& p);
/// Like classify but maps the zero vector to CaseTag::Zero instead of throwing.
CaseTag tag_of(const Coords& v, const ThomasParams& p);

struct OrbitCheckReport {
  int trials = 0;
  int compared = 0;
  int excluded = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Compares classify(v) with classify(Ad(g) v) for random single-generator
/// actions. Ad(exp(eps v4)) applied to a vector with a4 = 0 is excluded: it
/// produces a v3 component and rescales a1, a2 independently, so it moves
/// vectors between Case 3 and Case 2 and across the 2.x sub-branches.
OrbitCheckReport orbit_invariance_check(const Coords& v, const ThomasParams& p, int trials, std::uint64_t seed);

}  // namespace lie_thomas
