#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superglinf/blockprogram.hpp"
#include "superglinf/parity.hpp"
#include "superglinf/permutation.hpp"
#include "superglinf/rational.hpp"

namespace superglinf {

struct ExtNat {
  bool infinite = false;
  Index value = 0;

  static ExtNat inf() { return {true, 0}; }
  static ExtNat fin(Index v) { return {false, v}; }
  friend bool operator==(const ExtNat&, const ExtNat&) = default;
};

// The four half-line counts Odd/Even over (-inf, 0] and [0, +inf); both
// half-lines include 0.
struct CountInvariants {
  ExtNat odd_neg, even_neg, odd_pos, even_pos;

  int infinite_count() const {
    return int(odd_neg.infinite) + int(even_neg.infinite) + int(odd_pos.infinite) +
           int(even_pos.infinite);
  }
  friend bool operator==(const CountInvariants&, const CountInvariants&) = default;
};

struct Classification {
  CountInvariants counts;
  bool finite = false;  // odd total or even total finite
  ExtNat odd_total, even_total;
  std::string label;

  bool inf_class() const { return counts.infinite_count() == 4; }
  // Which of the four half-line counts are infinite; the complete invariant
  // for relabelling equivalence of non-finite functions.
  std::array<bool, 4> pattern() const {
    return {counts.odd_neg.infinite, counts.even_neg.infinite, counts.odd_pos.infinite,
            counts.even_pos.infinite};
  }
};

Classification classify(const ParityFunction& p);

// card{i in [a,b] : p(i) = 1}; errors when a > b.
Index odd_count(const ParityFunction& p, Index a, Index b);

// Odd(p;a,b)/(b-a), symmetric in its endpoints; inclusive count over an
// exclusive-length denominator, applied verbatim. Errors when a == b.
Rational density(const ParityFunction& p, Index a, Index b);

// True iff no constant run longer than c exists anywhere on Z.
bool is_tight(const ParityFunction& p, Index c);

enum class Side { left, right };

struct WindowSample {
  Index a = 0, b = 0;
  Rational density;
};

struct SpectrumEstimate {
  Side side = Side::right;
  Rational lower, upper;
  bool exact = false;
  Rational drift;  // spread against the previous window tier; 0 when exact
  std::vector<WindowSample> samples;
};

// Geometric window family [2^ceil(i/2), 2^i] plus half-phase windows, for
// i in [min_exp, max_exp]. Both endpoints grow and so does the gap.
struct WindowSchedule {
  int min_exp = 4;
  int max_exp = 17;
};

SpectrumEstimate spectrum(const ParityFunction& p, Side side, WindowSchedule sched = {});
SpectrumEstimate spectrum(const BlockProgram& p, Side side, WindowSchedule sched = {});

// Normalizing permutation built from the explicit counting formulas:
// act_on_parity(sigma_p(p), p) == p_st. Requires all four half-line counts
// infinite; the result always carries an Sg certificate.
FinPermutation sigma_p(const ParityFunction& p);

struct EquivalenceWitness {
  bool equivalent = false;
  GroupTag group = GroupTag::Sg;
  std::optional<FinPermutation> sigma;  // the certified part of the relabelling
  bool via_tau = false;                 // mirror twist i -> -i-1 applied after sigma

  // Full relabelling: act_on_parity(replay(), p1) == p2.
  FinPermutation replay() const;
};

// Decides relabelling equivalence and produces a replayable witness.
//   Sc: both functions finite; equivalent iff both total counts agree.
//   Sg: both non-finite; equivalent iff the infiniteness patterns agree
//       directly or after the mirror twist.
//   Sn: both tight with one-point spectra (eventually periodic, all counts
//       infinite); equivalent iff the two exact spectra agree.
// Other combinations throw std::domain_error.
EquivalenceWitness equivalent(const ParityFunction& p1, const ParityFunction& p2, GroupTag group);

bool witness_replays(const EquivalenceWitness& w, const ParityFunction& p1,
                     const ParityFunction& p2);

}  // namespace superglinf
