#include "superglinf/blockprogram.hpp"

#include <algorithm>
#include <stdexcept>

namespace superglinf {

BlockProgram::BlockProgram(Parity start, Rule rule, Index param)
    : start_(start), rule_(rule), param_(param) {
  if (rule == Rule::geometric && param < 2)
    throw std::invalid_argument("block program: geometric ratio must be at least 2");
  if (rule == Rule::polynomial && param < 1)
    throw std::invalid_argument("block program: polynomial degree must be at least 1");
  starts_.push_back(0);
}

Index BlockProgram::block_start(Index b) const {
  while (Index(starts_.size()) <= b) {
    Index i = Index(starts_.size()) - 1;
    Index len = 1;
    if (rule_ == Rule::geometric) {
      for (Index t = 0; t < i; ++t) len *= param_;
    } else {
      for (Index t = 0; t < param_; ++t) len *= (i + 1);
    }
    starts_.push_back(starts_.back() + len);
  }
  return starts_[b];
}

Index BlockProgram::block_of(Index x) const {
  while (starts_.back() <= x) block_start(Index(starts_.size()));
  auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
  return Index(it - starts_.begin()) - 1;
}

Parity BlockProgram::at(Index i) const {
  if (i < 0) i = -1 - i;
  Index b = block_of(i);
  return Parity(int(start_) ^ int(b & 1));
}

Index BlockProgram::odd_prefix(Index x) const {
  if (x < 0) return 0;
  Index b = block_of(x);
  Index odd = 0;
  for (Index t = 0; t < b; ++t)
    if (Parity(int(start_) ^ int(t & 1)) == Parity::odd) odd += block_start(t + 1) - block_start(t);
  if (Parity(int(start_) ^ int(b & 1)) == Parity::odd) odd += x - block_start(b) + 1;
  return odd;
}

Index BlockProgram::odd_count(Index a, Index b) const {
  if (a > b) throw std::invalid_argument("odd_count: a > b");
  // Mirror symmetry: count on [0, ...] pieces.
  Index total = 0;
  if (b >= 0) total += odd_prefix(b) - odd_prefix(std::max<Index>(a, 0) - 1);
  if (a < 0) {
    Index lo = 0, hi = -1 - a;  // mirrored range for indices [a, min(b,-1)]
    if (b < -1) lo = -1 - b;
    total += odd_prefix(hi) - odd_prefix(lo - 1);
  }
  return total;
}

}  // namespace superglinf
