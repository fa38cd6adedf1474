#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace superglinf {

using Index = std::int64_t;

// Floor division/remainder; the remainder is always in [0, |d|).
inline Index floordiv(Index n, Index d) {
  Index q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline Index floormod(Index n, Index d) { return n - floordiv(n, d) * d; }

inline Index lcm_checked(Index a, Index b) {
  Index g = std::gcd(a, b);
  if (g == 0) throw std::invalid_argument("lcm of zero");
  return a / g * b;
}

}  // namespace superglinf
