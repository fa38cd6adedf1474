#pragma once

#include <map>
#include <optional>
#include <utility>

#include "superglinf/parity.hpp"
#include "superglinf/rational.hpp"

namespace superglinf {

// Finitely supported matrix over Z x Z graded by a parity function: the
// elementary position (i, j) has parity p(i) + p(j). Zero entries are never
// stored, so support statements are literal set statements.
class SuperMatrix {
 public:
  using Entries = std::map<std::pair<Index, Index>, Rational>;

  explicit SuperMatrix(ParityFunction p) : parity_(std::move(p)) {}

  static SuperMatrix unit(const ParityFunction& p, Index i, Index j,
                          const Rational& value = Rational(1));

  const ParityFunction& parity() const { return parity_; }
  const Entries& entries() const { return entries_; }
  bool zero() const { return entries_.empty(); }
  Index support_size() const { return Index(entries_.size()); }

  Rational at(Index i, Index j) const;
  void set(Index i, Index j, Rational v);
  void add(Index i, Index j, const Rational& v);

  Parity position_parity(Index i, Index j) const { return parity_.at(i) + parity_.at(j); }
  // Parity shared by all entries; nullopt when mixed. The zero matrix counts
  // as even.
  std::optional<Parity> homogeneous_parity() const;

  // max |i - j| over the support (0 for the zero matrix).
  Index band_radius() const;

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  SuperMatrix& operator*=(const Rational& c);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(const Rational& c, SuperMatrix a) { return a *= c; }

  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

 private:
  ParityFunction parity_;
  Entries entries_;
};

// [a, b]_{ij} = sum_k a_{ik} b_{kj} - (-1)^{(p(i)+p(k))(p(j)+p(k))} b_{ik} a_{kj}.
// The two arguments must carry the same parity presentation.
SuperMatrix bracket(const SuperMatrix& a, const SuperMatrix& b);

// sum_i (-1)^{p(i)} a_{ii}.
Rational supertrace(const SuperMatrix& a);

// Entries with p(i) + p(j) = s.
SuperMatrix homogeneous_part(const SuperMatrix& a, Parity s);

}  // namespace superglinf
