#pragma once

#include "superglinf/supermatrix.hpp"

namespace superglinf {

// Diagonal sign matrix entering the degree-zero cocycle: +1 on the negative
// slots, -1 from slot 0 upward. Fixed library-wide so cocycle values are
// deterministic; any consistent alternative shifts the cocycle by a
// coboundary.
inline int j_sign(Index i) { return i < 0 ? +1 : -1; }

// The 2-cocycle sum_i (-1)^{p(i)} [a,b]_{ii} J_{ii}. Bilinear and
// super-antisymmetric in the same convention as the bracket.
Rational cocycle(const SuperMatrix& a, const SuperMatrix& b);

// Element of the one-dimensional central extension: a finite supermatrix
// plus a coefficient of the central generator.
struct ExtendedElement {
  SuperMatrix mat;
  Rational z{0};

  explicit ExtendedElement(SuperMatrix m, Rational z0 = Rational(0))
      : mat(std::move(m)), z(std::move(z0)) {}

  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
};

// Matrix part brackets, central part picks up the cocycle; the central
// coordinates of the arguments never influence the result.
ExtendedElement extended_bracket(const ExtendedElement& x, const ExtendedElement& y);

}  // namespace superglinf
