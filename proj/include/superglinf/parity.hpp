#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superglinf/util.hpp"

namespace superglinf {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity(static_cast<int>(a) ^ static_cast<int>(b));
}
inline Parity flip(Parity a) { return a + Parity::odd; }
// (-1)^p
inline int parity_sign(Parity a) { return a == Parity::odd ? -1 : +1; }
inline char parity_char(Parity a) { return a == Parity::odd ? '1' : '0'; }

// Periodic tail rule, anchored at absolute index 0: the value at index i is
// word[i mod size]. A word of length 1 is a constant tail.
struct TailRule {
  std::vector<Parity> word;

  static TailRule constant(Parity v) { return TailRule{{v}}; }
  static TailRule periodic(const std::string& bits);

  Parity at(Index i) const { return word[floormod(i, Index(word.size()))]; }
  bool constant_rule() const { return word.size() == 1; }
  Index period() const { return Index(word.size()); }
  Index odd_per_period() const;
  // Longest constant run in the doubly infinite periodic sequence; -1 if the
  // word is constant (infinite run).
  Index max_run() const;
  void minimize();
  std::string bits() const;
  TailRule flipped() const;

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

// Total map Z -> Z/2 presented by an explicit window plus tail rules on both
// sides. Constructors canonicalize: tails are reduced to least period, the
// window is shrunk into the tails, and an empty window is anchored
// deterministically, so equal functions have identical presentations.
class ParityFunction {
 public:
  ParityFunction(Index window_lo, std::vector<Parity> window, TailRule left, TailRule right);

  static ParityFunction p_st();
  static ParityFunction p_plus();
  static ParityFunction constant(Parity v);
  // Single periodic word everywhere, anchored at 0.
  static ParityFunction periodic(const std::string& bits);

  Parity at(Index i) const;

  Index window_lo() const { return window_lo_; }
  Index window_hi() const { return window_lo_ + Index(window_.size()) - 1; }
  const std::vector<Parity>& window() const { return window_; }
  const TailRule& left_tail() const { return left_; }
  const TailRule& right_tail() const { return right_; }

  // Inclusive count of odd (resp. even) values on [a, b]; requires a <= b.
  Index odd_count(Index a, Index b) const;
  Index even_count(Index a, Index b) const { return b - a + 1 - odd_count(a, b); }

  // Half-line counts: whether {i <= b : p(i) = v} is infinite, and its size
  // when finite. Symbolic from the tail rules.
  bool infinitely_many_below(Index b, Parity v) const;
  bool infinitely_many_above(Index a, Parity v) const;
  Index count_below(Index b, Parity v) const;  // requires finiteness
  Index count_above(Index a, Parity v) const;  // requires finiteness

  // Longest constant run anywhere on Z; -1 when some tail is constant.
  Index max_run() const;

  ParityFunction flipped() const;

  friend bool operator==(const ParityFunction&, const ParityFunction&) = default;

 private:
  void canonicalize();

  Index window_lo_;
  std::vector<Parity> window_;
  TailRule left_, right_;
};

}  // namespace superglinf
