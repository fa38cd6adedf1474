#pragma once

#include "superglinf/extension.hpp"
#include "superglinf/permutation.hpp"

namespace superglinf {

// The isomorphism induced by relabelling indices along sigma:
// matrix part (phi x)_{ij} = x_{sigma^-1(i), sigma^-1(j)}, and the central
// coordinate picks up the diagonal correction
//   z' = z + sum_d (-1)^{p(d)} x_{dd} (J_{sigma(d)} - J_d),
// the unique correction making phi a homomorphism of the extended brackets.
// Requires sigma in S_g so the target algebra is defined; throws otherwise.
ExtendedElement phi_sigma(const FinPermutation& sigma, const ExtendedElement& x);

// Parity function of the image algebra: p' with p'(sigma(i)) = p(i).
ParityFunction transported_parity(const FinPermutation& sigma, const ParityFunction& p);

}  // namespace superglinf
