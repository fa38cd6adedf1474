#pragma once

#include <map>
#include <string>
#include <vector>

#include "superglinf/parity.hpp"
#include "superglinf/permutation.hpp"
#include "superglinf/rational.hpp"
#include "superglinf/supermatrix.hpp"

namespace superglinf {

// Shift class of a periodic band matrix: plain k-periodic parity, or parity
// flipping by one across a period.
enum class PeriodicType { A, B };

// Band matrix invariant under the k-step diagonal shift a_{i+k,j+k} = a_{ij},
// stored on the representative rows 0..k-1. Type A requires p(i) = p(i+k),
// type B requires p(i) = p(i+k) + 1.
class PeriodicBandMatrix {
 public:
  PeriodicBandMatrix(Index k, Index band, ParityFunction parity, PeriodicType type);

  Index period() const { return k_; }
  Index band() const { return band_; }
  PeriodicType type() const { return type_; }
  const ParityFunction& parity() const { return parity_; }
  const std::map<std::pair<Index, Index>, Rational>& cells() const { return cells_; }

  // Entry of the full matrix at arbitrary (i, j).
  Rational at(Index i, Index j) const;
  // Sets the representative cell (r, j), 0 <= r < k, |r - j| <= band.
  void set_cell(Index r, Index j, Rational v);

  // Dense expansion on [lo, hi] x [lo, hi] sharing this parity function.
  SuperMatrix window(Index lo, Index hi) const;

  friend bool operator==(const PeriodicBandMatrix&, const PeriodicBandMatrix&) = default;

 private:
  Index k_;
  Index band_;
  ParityFunction parity_;
  PeriodicType type_;
  std::map<std::pair<Index, Index>, Rational> cells_;
};

// Bracket computed on representatives; band radii add, period and type are
// preserved. Arguments must share period, parity presentation and type.
PeriodicBandMatrix periodic_bracket(const PeriodicBandMatrix& x, const PeriodicBandMatrix& y);

// k x k matrix of Laurent polynomials in one variable.
class LaurentMatrix {
 public:
  using Poly = std::map<Index, Rational>;  // exponent -> coefficient, no zeros

  LaurentMatrix(Index k, std::vector<Parity> residue_parity);

  Index size() const { return k_; }
  const Poly& entry(Index r, Index s) const { return entries_[r * k_ + s]; }
  Parity residue_parity(Index r) const { return parity_[r]; }

  void add(Index r, Index s, Index exponent, const Rational& coeff);

  bool zero() const;
  std::string str() const;  // k x k grid of polynomial strings

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  Index k_;
  std::vector<Parity> parity_;
  std::vector<Poly> entries_;
};

// Residue transform of a type-A matrix: the t^d coefficient of entry (r, s)
// is a_{r, s + d k}. Linear, injective on representatives, and intertwines
// the two brackets.
LaurentMatrix to_loop(const PeriodicBandMatrix& x);

// Superbracket of Laurent matrices with signs from the residue parities.
LaurentMatrix loop_bracket(const LaurentMatrix& x, const LaurentMatrix& y);

// Defining data of a classical-type subalgebra:
//   B:  pairing i <-> -i,   parity constraint p(i) = p(-i), p(0) = 0;
//   D:  pairing i <-> 1-i,  constraint p(i) = p(1-i);
//   pe: pairing i <-> 1-i,  constraint p(i) = p(1-i) + 1;
//   q:  centralizer of the odd involution P given by a fixed-point-free
//       parity-swapping pairing.
struct InvolutionSpec {
  enum class Kind { B, D, pe, q } kind = Kind::B;
  // Pairing for kind q; ignored otherwise.
  FinPermutation pairing = FinPermutation::pair_swap();

  static InvolutionSpec type_B() { return {Kind::B, FinPermutation::pair_swap()}; }
  static InvolutionSpec type_D() { return {Kind::D, FinPermutation::pair_swap()}; }
  static InvolutionSpec type_pe() { return {Kind::pe, FinPermutation::pair_swap()}; }
  static InvolutionSpec type_q(FinPermutation pairing) {
    return {Kind::q, std::move(pairing)};
  }
};

std::string involution_name(InvolutionSpec::Kind k);

// Checks the parity-function compatibility constraint of the spec; throws
// std::domain_error when violated.
void check_involution_compatible(const InvolutionSpec& spec, const ParityFunction& p);

// The defining anti-involution theta of the spec (B/D/pe), or the signed
// P-conjugation (q). Members are the matrices fixed by the associated
// symmetrization; theta is an involution, so the projector below is
// idempotent with the member set as its image.
SuperMatrix involution_image(const InvolutionSpec& spec, const SuperMatrix& a);

bool subalgebra_member(const SuperMatrix& a, const InvolutionSpec& spec);
SuperMatrix subalgebra_project(const SuperMatrix& a, const InvolutionSpec& spec);

bool subalgebra_member(const PeriodicBandMatrix& a, const InvolutionSpec& spec);

}  // namespace superglinf
