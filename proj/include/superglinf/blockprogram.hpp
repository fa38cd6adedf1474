#pragma once

#include <vector>

#include "superglinf/parity.hpp"

namespace superglinf {

// Generator for parity functions that are not eventually periodic: constant
// blocks of alternating parity laid out on [0, inf), block i of length
// ratio^i (geometric) or (i+1)^degree (polynomial), mirrored to the negative
// side by p(-1-x) = p(x). These carry the nontrivial density spectra.
class BlockProgram {
 public:
  enum class Rule { geometric, polynomial };

  BlockProgram(Parity start, Rule rule, Index param);

  Parity start() const { return start_; }
  Rule rule() const { return rule_; }
  Index param() const { return param_; }

  Parity at(Index i) const;

  // Inclusive count of odd values on [a, b] via block boundaries; exact.
  Index odd_count(Index a, Index b) const;

 private:
  Index block_of(Index x) const;      // block containing x >= 0
  Index block_start(Index b) const;   // first index of block b
  Index odd_prefix(Index x) const;    // odd count on [0, x], x >= -1

  Parity start_;
  Rule rule_;
  Index param_;
  mutable std::vector<Index> starts_;  // cumulative block boundaries, grown on demand
};

}  // namespace superglinf
