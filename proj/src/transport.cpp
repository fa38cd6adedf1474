#include "superglinf/transport.hpp"

#include <stdexcept>

namespace superglinf {

ParityFunction transported_parity(const FinPermutation& sigma, const ParityFunction& p) {
  return act_on_parity(sigma.inverse(), p);
}

ExtendedElement phi_sigma(const FinPermutation& sigma, const ExtendedElement& x) {
  MembershipCertificate cert = membership(sigma, GroupTag::Sg);
  if (!cert.member)
    throw std::domain_error("phi_sigma: permutation lacks an Sg certificate (" + cert.note + ")");

  const ParityFunction& p = x.mat.parity();
  SuperMatrix mat(transported_parity(sigma, p));
  Rational z = x.z;
  for (const auto& [pos, val] : x.mat.entries()) {
    auto [i, j] = pos;
    mat.set(sigma.at(i), sigma.at(j), val);
    if (i == j) {
      int dj = j_sign(sigma.at(i)) - j_sign(i);
      if (dj != 0) z += Rational(parity_sign(p.at(i)) * dj) * val;
    }
  }
  return ExtendedElement(std::move(mat), std::move(z));
}

}  // namespace superglinf
