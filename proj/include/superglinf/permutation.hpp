#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superglinf/parity.hpp"
#include "superglinf/rational.hpp"
#include "superglinf/util.hpp"

namespace superglinf {

// Arithmetic-progression tail of a permutation, anchored at absolute index 0:
// for i with i mod period == r, the image is offset[r] + floordiv(i, period) * step[r].
struct TailMap {
  Index period = 1;
  std::vector<Index> offset{0};  // size == period
  std::vector<Index> step{1};    // size == period, all nonzero

  static TailMap identity() { return TailMap{}; }

  Index at(Index i) const {
    Index r = floormod(i, period);
    return offset[r] + floordiv(i, period) * step[r];
  }
  void minimize();

  friend bool operator==(const TailMap&, const TailMap&) = default;
};

// Finitely presented bijection of Z: an explicit window of images plus
// arithmetic-progression tails on both sides. The constructor canonicalizes
// the presentation and verifies exactly that the data describes a bijection
// (progression images pairwise disjoint, window images filling the gaps).
class FinPermutation {
 public:
  FinPermutation(Index window_lo, std::vector<Index> window, TailMap left, TailMap right);

  static FinPermutation identity();
  static FinPermutation shift(Index n);
  // i -> -i - 1, the tail-exchanging involution.
  static FinPermutation tau();
  // i -> -i.
  static FinPermutation negate();
  // i -> 1 - i.
  static FinPermutation reflect_about_half();
  static FinPermutation transposition(Index a, Index b);
  // Pairs 2r <-> 2r+1.
  static FinPermutation pair_swap();

  Index at(Index i) const;
  FinPermutation inverse() const;

  Index window_lo() const { return window_lo_; }
  Index window_hi() const { return window_lo_ + Index(window_.size()) - 1; }
  const std::vector<Index>& window() const { return window_; }
  const TailMap& left_tail() const { return left_; }
  const TailMap& right_tail() const { return right_; }

  bool is_identity() const;

  friend bool operator==(const FinPermutation&, const FinPermutation&) = default;

 private:
  void canonicalize();
  void verify_bijection() const;

  Index window_lo_ = 0;
  std::vector<Index> window_;
  TailMap left_, right_;
};

// s after t: (compose(s, t))(i) = s(t(i)).
FinPermutation compose(const FinPermutation& s, const FinPermutation& t);

// (sigma p)(i) = p(sigma(i)); always lands back in the presentation grammar.
ParityFunction act_on_parity(const FinPermutation& sigma, const ParityFunction& p);

enum class GroupTag { Sc, So, Sn, Sm, Sl, Sg, SZ };

std::string group_name(GroupTag g);

struct MembershipCertificate {
  GroupTag group = GroupTag::SZ;
  bool member = false;
  // Displacement bound for Sc/So/Sn, admissible exponent for Sl, the
  // same-sign threshold for Sg.
  std::optional<Rational> witness;
  std::string note;
};

// Exact decision within the presentation grammar. Certificates respect the
// group tower Sc <= So <= Sn <= Sm <= Sl <= Sg <= SZ. On this grammar
// sub-linear displacement forces bounded displacement, so Sc, So and Sn
// coincide; the groups differ on arbitrary permutations, not here.
MembershipCertificate membership(const FinPermutation& sigma, GroupTag group);

// Largest |sigma(i) - i|; nullopt when the displacement is unbounded.
std::optional<Index> displacement_bound(const FinPermutation& sigma);

// 1 + max over i <= 0 of sigma(i); defined whenever sigma sends the far left
// into the far left (in particular on all of S_g).
Index left_image_bound(const FinPermutation& sigma);

}  // namespace superglinf
