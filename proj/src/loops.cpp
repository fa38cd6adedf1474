#include "superglinf/loops.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace superglinf {

namespace {

Parity type_shift(PeriodicType t) { return t == PeriodicType::A ? Parity::even : Parity::odd; }

}  // namespace

PeriodicBandMatrix::PeriodicBandMatrix(Index k, Index band, ParityFunction parity,
                                       PeriodicType type)
    : k_(k), band_(band), parity_(std::move(parity)), type_(type) {
  if (k < 1) throw std::invalid_argument("periodic matrix: period must be positive");
  if (band < 0) throw std::invalid_argument("periodic matrix: negative band");
  // p(i + k) must equal p(i) (type A) or p(i) + 1 (type B) everywhere; beyond
  // the window everything repeats with the lcm period, so a two-period scan
  // on each side decides this exactly.
  Index M = lcm_checked(k, lcm_checked(parity_.left_tail().period(), parity_.right_tail().period()));
  Parity shift = type_shift(type_);
  for (Index i = parity_.window_lo() - 2 * M; i <= parity_.window_hi() + 2 * M; ++i)
    if (parity_.at(i + k) != parity_.at(i) + shift)
      throw std::invalid_argument(type_ == PeriodicType::A
                                      ? "periodic matrix: parity is not k-periodic"
                                      : "periodic matrix: parity is not k-antiperiodic");
}

Rational PeriodicBandMatrix::at(Index i, Index j) const {
  Index r = floormod(i, k_);
  Index m = floordiv(i, k_);
  auto it = cells_.find({r, j - m * k_});
  return it == cells_.end() ? Rational(0) : it->second;
}

void PeriodicBandMatrix::set_cell(Index r, Index j, Rational v) {
  if (r < 0 || r >= k_) throw std::invalid_argument("periodic matrix: representative row out of range");
  if (std::abs(r - j) > band_) throw std::invalid_argument("periodic matrix: cell outside the band");
  if (is_zero(v))
    cells_.erase({r, j});
  else
    cells_[{r, j}] = std::move(v);
}

SuperMatrix PeriodicBandMatrix::window(Index lo, Index hi) const {
  SuperMatrix out(parity_);
  for (Index i = lo; i <= hi; ++i)
    for (Index j = std::max(lo, i - band_); j <= std::min(hi, i + band_); ++j)
      out.set(i, j, at(i, j));
  return out;
}

PeriodicBandMatrix periodic_bracket(const PeriodicBandMatrix& x, const PeriodicBandMatrix& y) {
  if (x.period() != y.period()) throw std::invalid_argument("periodic bracket: periods differ");
  if (!(x.parity() == y.parity()))
    throw std::invalid_argument("periodic bracket: parity functions differ");
  if (x.type() != y.type()) throw std::invalid_argument("periodic bracket: shift types differ");

  const ParityFunction& p = x.parity();
  PeriodicBandMatrix out(x.period(), x.band() + y.band(), p, x.type());
  for (Index r = 0; r < x.period(); ++r) {
    for (Index j = r - out.band(); j <= r + out.band(); ++j) {
      Rational acc(0);
      Index klo = std::max(r - x.band(), j - y.band());
      Index khi = std::min(r + x.band(), j + y.band());
      for (Index kk = klo; kk <= khi; ++kk) acc += x.at(r, kk) * y.at(kk, j);
      klo = std::max(r - y.band(), j - x.band());
      khi = std::min(r + y.band(), j + x.band());
      for (Index kk = klo; kk <= khi; ++kk) {
        int e = (int(p.at(r) + p.at(kk)) * int(p.at(j) + p.at(kk))) % 2;
        Rational term = y.at(r, kk) * x.at(kk, j);
        acc += e ? term : -term;
      }
      out.set_cell(r, j, acc);
    }
  }
  return out;
}

LaurentMatrix::LaurentMatrix(Index k, std::vector<Parity> residue_parity)
    : k_(k), parity_(std::move(residue_parity)), entries_(size_t(k * k)) {
  if (k < 1 || Index(parity_.size()) != k)
    throw std::invalid_argument("laurent matrix: bad size or parity vector");
}

void LaurentMatrix::add(Index r, Index s, Index exponent, const Rational& coeff) {
  if (r < 0 || r >= k_ || s < 0 || s >= k_) throw std::out_of_range("laurent matrix: entry index");
  Poly& p = entries_[r * k_ + s];
  auto it = p.find(exponent);
  if (it == p.end()) {
    if (!is_zero(coeff)) p[exponent] = coeff;
    return;
  }
  it->second += coeff;
  if (is_zero(it->second)) p.erase(it);
}

bool LaurentMatrix::zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.empty(); });
}

namespace {

std::string poly_str(const LaurentMatrix::Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool unit = a == 1;
    if (e == 0) {
      out << rational_str(a);
    } else {
      if (!unit) out << rational_str(a);
      out << "t";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

std::string LaurentMatrix::str() const {
  // column widths for an aligned grid
  std::vector<std::string> cells(entries_.size());
  for (size_t t = 0; t < entries_.size(); ++t) cells[t] = poly_str(entries_[t]);
  std::vector<size_t> width(size_t(k_), 0);
  for (Index r = 0; r < k_; ++r)
    for (Index s = 0; s < k_; ++s) width[s] = std::max(width[s], cells[r * k_ + s].size());
  std::ostringstream out;
  for (Index r = 0; r < k_; ++r) {
    out << "[ ";
    for (Index s = 0; s < k_; ++s) {
      const std::string& c = cells[r * k_ + s];
      out << c << std::string(width[s] - c.size(), ' ');
      if (s + 1 < k_) out << "  ";
    }
    out << " ]\n";
  }
  return out.str();
}

LaurentMatrix to_loop(const PeriodicBandMatrix& x) {
  if (x.type() != PeriodicType::A)
    throw std::invalid_argument("to_loop: defined for type A (periodic parity) only");
  std::vector<Parity> q;
  for (Index r = 0; r < x.period(); ++r) q.push_back(x.parity().at(r));
  LaurentMatrix out(x.period(), std::move(q));
  for (const auto& [cell, v] : x.cells()) {
    auto [r, j] = cell;
    out.add(r, floormod(j, x.period()), floordiv(j, x.period()), v);
  }
  return out;
}

LaurentMatrix loop_bracket(const LaurentMatrix& x, const LaurentMatrix& y) {
  if (x.size() != y.size()) throw std::invalid_argument("loop bracket: sizes differ");
  Index k = x.size();
  std::vector<Parity> q;
  for (Index r = 0; r < k; ++r) {
    if (x.residue_parity(r) != y.residue_parity(r))
      throw std::invalid_argument("loop bracket: residue parities differ");
    q.push_back(x.residue_parity(r));
  }
  LaurentMatrix out(k, q);
  for (Index r = 0; r < k; ++r)
    for (Index s = 0; s < k; ++s)
      for (Index u = 0; u < k; ++u) {
        for (const auto& [e1, c1] : x.entry(r, u))
          for (const auto& [e2, c2] : y.entry(u, s)) out.add(r, s, e1 + e2, c1 * c2);
        int e = (int(q[r] + q[u]) * int(q[s] + q[u])) % 2;
        for (const auto& [e1, c1] : y.entry(r, u))
          for (const auto& [e2, c2] : x.entry(u, s))
            out.add(r, s, e1 + e2, (e ? c1 : -c1) * c2);
      }
  return out;
}

std::string involution_name(InvolutionSpec::Kind k) {
  switch (k) {
    case InvolutionSpec::Kind::B: return "B";
    case InvolutionSpec::Kind::D: return "D";
    case InvolutionSpec::Kind::pe: return "pe";
    case InvolutionSpec::Kind::q: return "q";
  }
  return "?";
}

namespace {

bool pairing_has_fixed_point(const FinPermutation& s) {
  for (Index i = s.window_lo(); i <= s.window_hi(); ++i)
    if (s.at(i) == i) return true;
  for (const TailMap* t : {&s.left_tail(), &s.right_tail()}) {
    bool left = t == &s.left_tail();
    for (Index r = 0; r < t->period; ++r) {
      Index off = t->offset[r], st = t->step[r], k = t->period;
      // fixed point: off + m*st == r + m*k
      if (st == k) {
        if (off == r) return true;
        continue;
      }
      if ((r - off) % (st - k) != 0) continue;
      Index m = (r - off) / (st - k);
      Index i = r + m * k;
      if (left ? i < s.window_lo() : i > s.window_hi()) return true;
    }
  }
  return false;
}

// Reflection underlying kinds B, D and pe.
FinPermutation mirror_of(InvolutionSpec::Kind k) {
  return k == InvolutionSpec::Kind::B ? FinPermutation::negate()
                                      : FinPermutation::reflect_about_half();
}

// Side sign attached to odd slots so the defining form has the right
// symmetry; +1 on even slots always.
int side_sign(InvolutionSpec::Kind k, const ParityFunction& p, Index i) {
  if (p.at(i) == Parity::even) return 1;
  switch (k) {
    case InvolutionSpec::Kind::B: return i > 0 ? 1 : -1;
    case InvolutionSpec::Kind::D: return i >= 1 ? 1 : -1;
    default: return 1;
  }
}

int entry_sign(InvolutionSpec::Kind k, const ParityFunction& p, Index i, Index j) {
  int pi = int(p.at(i)), pj = int(p.at(j));
  int s = (pi * pj + pj) % 2 ? -1 : 1;
  return s * side_sign(k, p, j) * side_sign(k, p, i);
}

}  // namespace

void check_involution_compatible(const InvolutionSpec& spec, const ParityFunction& p) {
  switch (spec.kind) {
    case InvolutionSpec::Kind::B:
      if (!(act_on_parity(FinPermutation::negate(), p) == p))
        throw std::domain_error("involution B: parity must satisfy p(i) = p(-i)");
      if (p.at(0) != Parity::even)
        throw std::domain_error("involution B: parity must vanish at 0");
      return;
    case InvolutionSpec::Kind::D:
      if (!(act_on_parity(FinPermutation::reflect_about_half(), p) == p))
        throw std::domain_error("involution D: parity must satisfy p(i) = p(1-i)");
      return;
    case InvolutionSpec::Kind::pe:
      if (!(act_on_parity(FinPermutation::reflect_about_half(), p) == p.flipped()))
        throw std::domain_error("involution pe: parity must satisfy p(i) = p(1-i) + 1");
      return;
    case InvolutionSpec::Kind::q: {
      if (!compose(spec.pairing, spec.pairing).is_identity())
        throw std::domain_error("involution q: pairing must be an involution");
      if (pairing_has_fixed_point(spec.pairing))
        throw std::domain_error("involution q: pairing must be fixed-point free");
      if (!(act_on_parity(spec.pairing, p) == p.flipped()))
        throw std::domain_error("involution q: pairing must swap parities");
      return;
    }
  }
}

SuperMatrix involution_image(const InvolutionSpec& spec, const SuperMatrix& a) {
  const ParityFunction& p = a.parity();
  SuperMatrix out(p);
  if (spec.kind == InvolutionSpec::Kind::q) {
    const FinPermutation& tau = spec.pairing;
    for (const auto& [pos, v] : a.entries()) {
      auto [i, j] = pos;
      int s = parity_sign(p.at(i) + p.at(j));
      out.add(tau.at(i), tau.at(j), Rational(s) * v);
    }
    return out;
  }
  FinPermutation pi = mirror_of(spec.kind);
  for (const auto& [pos, v] : a.entries()) {
    auto [i, j] = pos;
    Index oi = pi.at(j), oj = pi.at(i);
    // sign ratio g(j)/g(i) equals g(j)*g(i) since the values are +-1
    out.add(oi, oj, Rational(entry_sign(spec.kind, p, oi, oj)) * v);
  }
  return out;
}

bool subalgebra_member(const SuperMatrix& a, const InvolutionSpec& spec) {
  check_involution_compatible(spec, a.parity());
  SuperMatrix img = involution_image(spec, a);
  return spec.kind == InvolutionSpec::Kind::q ? (a - img).zero() : (a + img).zero();
}

SuperMatrix subalgebra_project(const SuperMatrix& a, const InvolutionSpec& spec) {
  check_involution_compatible(spec, a.parity());
  SuperMatrix img = involution_image(spec, a);
  SuperMatrix sum = spec.kind == InvolutionSpec::Kind::q ? a + img : a - img;
  return make_rational(1, 2) * sum;
}

bool subalgebra_member(const PeriodicBandMatrix& a, const InvolutionSpec& spec) {
  check_involution_compatible(spec, a.parity());
  if (spec.kind == InvolutionSpec::Kind::q) {
    FinPermutation shifted = compose(FinPermutation::shift(a.period()), spec.pairing);
    FinPermutation other = compose(spec.pairing, FinPermutation::shift(a.period()));
    if (!(shifted == other))
      throw std::domain_error("involution q: pairing must commute with the period shift");
  }
  // Entries couple across the reflection; periodicity reduces every instance
  // of the defining relation to a window around the origin plus one stable
  // far band, all checked exactly.
  Index W = 3 * a.period() + 2 * a.band() + 4;
  SuperMatrix win = a.window(-(W + a.band() + 2), W + a.band() + 2);
  SuperMatrix img = involution_image(spec, win);
  int eps = spec.kind == InvolutionSpec::Kind::q ? 1 : -1;
  for (Index i = -W; i <= W; ++i)
    for (Index j = i - a.band(); j <= i + a.band(); ++j)
      if (!(a.at(i, j) == Rational(eps) * img.at(i, j))) return false;
  return true;
}

}  // namespace superglinf
