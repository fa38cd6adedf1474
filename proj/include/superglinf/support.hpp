#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superglinf/rational.hpp"
#include "superglinf/util.hpp"

namespace superglinf {

// Growth regimes of matrix supports, ordered c within o within l within g.
enum class GrowthClass { g, l, o, c };

// Describes where a (possibly infinite) matrix may be nonzero. Asymptotic
// class membership is undecidable on raw finite data, so the three
// descriptors below form the whole grammar: explicit finite support, a
// constant-width band, and a band whose radius grows like coeff * |i|^e with
// rational exponent 0 <= e < 1.
struct SupportProfile {
  struct Finite {
    std::vector<std::pair<Index, Index>> points;
  };
  struct Band {
    Index radius = 0;
  };
  struct PowerBand {
    Rational coeff;     // > 0
    Rational exponent;  // in [0, 1); larger exponents are outside the grammar
  };
  std::variant<Finite, Band, PowerBand> kind;

  static SupportProfile finite(std::vector<std::pair<Index, Index>> pts) {
    return {Finite{std::move(pts)}};
  }
  static SupportProfile band(Index radius) { return {Band{radius}}; }
  static SupportProfile power_band(Rational coeff, Rational exponent) {
    return {PowerBand{std::move(coeff), std::move(exponent)}};
  }
};

struct ClassDecision {
  bool member = false;
  // Band constant for class c, an admissible (or failing) lambda for l/o.
  std::optional<Rational> witness;
  std::string note;
};

// Exact decision for the descriptor grammar; throws std::domain_error for
// descriptors outside it (exponent >= 1 or nonpositive coefficient).
ClassDecision class_membership(const SupportProfile& profile, GrowthClass cls);

}  // namespace superglinf
