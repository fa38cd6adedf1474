#include "superglinf/supermatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace superglinf {

SuperMatrix SuperMatrix::unit(const ParityFunction& p, Index i, Index j, const Rational& value) {
  SuperMatrix m(p);
  m.set(i, j, value);
  return m;
}

Rational SuperMatrix::at(Index i, Index j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SuperMatrix::set(Index i, Index j, Rational v) {
  if (is_zero(v))
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(v);
}

void SuperMatrix::add(Index i, Index j, const Rational& v) {
  auto it = entries_.find({i, j});
  if (it == entries_.end()) {
    if (!is_zero(v)) entries_[{i, j}] = v;
    return;
  }
  it->second += v;
  if (is_zero(it->second)) entries_.erase(it);
}

std::optional<Parity> SuperMatrix::homogeneous_parity() const {
  if (entries_.empty()) return Parity::even;
  std::optional<Parity> s;
  for (const auto& [pos, val] : entries_) {
    Parity q = position_parity(pos.first, pos.second);
    if (!s)
      s = q;
    else if (*s != q)
      return std::nullopt;
  }
  return s;
}

Index SuperMatrix::band_radius() const {
  Index r = 0;
  for (const auto& [pos, val] : entries_) r = std::max(r, std::abs(pos.first - pos.second));
  return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  if (!(parity_ == o.parity_)) throw std::invalid_argument("supermatrix: parity functions differ");
  for (const auto& [pos, val] : o.entries_) add(pos.first, pos.second, val);
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  if (!(parity_ == o.parity_)) throw std::invalid_argument("supermatrix: parity functions differ");
  for (const auto& [pos, val] : o.entries_) add(pos.first, pos.second, -val);
  return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rational& c) {
  if (is_zero(c)) {
    entries_.clear();
    return *this;
  }
  for (auto& [pos, val] : entries_) val *= c;
  return *this;
}

SuperMatrix bracket(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.parity() == b.parity()))
    throw std::invalid_argument("bracket: parity functions differ");
  const ParityFunction& p = a.parity();

  // Row index of the right factor of each product term.
  auto rows_of = [](const SuperMatrix& m) {
    std::map<Index, std::vector<std::pair<Index, const Rational*>>> rows;
    for (const auto& [pos, val] : m.entries()) rows[pos.first].push_back({pos.second, &val});
    return rows;
  };
  auto b_rows = rows_of(b);
  auto a_rows = rows_of(a);

  SuperMatrix out(p);
  for (const auto& [pos, av] : a.entries()) {
    auto [i, k] = pos;
    auto it = b_rows.find(k);
    if (it == b_rows.end()) continue;
    for (const auto& [j, bv] : it->second) out.add(i, j, av * (*bv));
  }
  for (const auto& [pos, bval] : b.entries()) {
    auto [i, k] = pos;
    auto it = a_rows.find(k);
    if (it == a_rows.end()) continue;
    int pik = static_cast<int>(p.at(i) + p.at(k));
    for (const auto& [j, aptr] : it->second) {
      Rational term = bval * (*aptr);
      bool twist = (pik * static_cast<int>(p.at(j) + p.at(k))) % 2 != 0;
      out.add(i, j, twist ? term : Rational(-term));
    }
  }
  return out;
}

Rational supertrace(const SuperMatrix& a) {
  Rational s(0);
  for (const auto& [pos, val] : a.entries()) {
    if (pos.first != pos.second) continue;
    if (a.parity().at(pos.first) == Parity::odd)
      s -= val;
    else
      s += val;
  }
  return s;
}

SuperMatrix homogeneous_part(const SuperMatrix& a, Parity s) {
  SuperMatrix out(a.parity());
  for (const auto& [pos, val] : a.entries())
    if (a.position_parity(pos.first, pos.second) == s) out.set(pos.first, pos.second, val);
  return out;
}

}  // namespace superglinf
