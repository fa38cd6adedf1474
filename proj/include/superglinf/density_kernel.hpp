#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include "superglinf/parity.hpp"

namespace superglinf {

// Counts indices in [lo, hi] where f(i) is odd. The parallel variant is the
// production path for long density windows; the serial one is the reference
// it is tested and benchmarked against.

template <class F>
Index odd_count_range_serial(F&& f, Index lo, Index hi) {
  Index count = 0;
  for (Index i = lo; i <= hi; ++i)
    if (f(i) == Parity::odd) ++count;
  return count;
}

template <class F>
Index odd_count_range(F&& f, Index lo, Index hi) {
#ifdef _OPENMP
  if (hi - lo >= 1 << 12) {
    Index count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (Index i = lo; i <= hi; ++i)
      if (f(i) == Parity::odd) ++count;
    return count;
  }
#endif
  return odd_count_range_serial(f, lo, hi);
}

}  // namespace superglinf
