#include "superglinf/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace superglinf {

namespace {

Index ceildiv(Index a, Index b) { return -floordiv(-a, b); }

// A one-sided arithmetic progression of images with step +-K inside one
// residue class mod K. `start` is the endpoint nearest the window.
struct Ray {
  Index start = 0;
  bool from_right = false;  // which tail produced it
  Index cls = 0;            // residue class of the source tail
  Index k_side = 1;         // period of the source tail
  Index offset = 0;
  Index step = 1;
};

struct RaySystem {
  Index K = 1;
  std::vector<std::optional<Ray>> up, down;     // indexed by residue mod K
  std::map<Index, Index> gap_preimage;          // gap value -> window index mapped onto it
};

constexpr Index kMaxModulus = 1 << 20;

RaySystem build_rays(Index window_lo, const std::vector<Index>& window, const TailMap& left,
                     const TailMap& right) {
  for (const TailMap* t : {&left, &right}) {
    if (t->period < 1 || Index(t->offset.size()) != t->period ||
        Index(t->step.size()) != t->period)
      throw std::invalid_argument("permutation: malformed tail map");
    for (Index s : t->step)
      if (s == 0) throw std::invalid_argument("permutation: zero tail step is not injective");
  }
  Index K = 1;
  for (const TailMap* t : {&left, &right})
    for (Index s : t->step) {
      K = lcm_checked(K, std::abs(s));
      if (K > kMaxModulus) throw std::invalid_argument("permutation: tail steps too large to verify");
    }

  RaySystem sys;
  sys.K = K;
  sys.up.resize(K);
  sys.down.resize(K);
  Index window_hi = window_lo + Index(window.size()) - 1;

  auto place = [&](Ray ray, bool upward) {
    Index rho = floormod(ray.start, K);
    auto& slot = upward ? sys.up[rho] : sys.down[rho];
    if (slot)
      throw std::invalid_argument("permutation: two tail progressions collide in residue class " +
                                  std::to_string(rho));
    slot = ray;
  };

  for (Index r = 0; r < right.period; ++r) {
    Index s = right.step[r];
    Index m_min = floordiv(window_hi - r, right.period) + 1;
    for (Index t = 0; t < K / std::abs(s); ++t) {
      Index m = m_min + t;
      Ray ray{right.offset[r] + m * s, true, r, right.period, right.offset[r], s};
      place(ray, s > 0);
    }
  }
  for (Index r = 0; r < left.period; ++r) {
    Index s = left.step[r];
    Index m_max = floordiv(window_lo - 1 - r, left.period);
    for (Index t = 0; t < K / std::abs(s); ++t) {
      Index m = m_max - t;
      Ray ray{left.offset[r] + m * s, false, r, left.period, left.offset[r], s};
      place(ray, s < 0);
    }
  }

  Index gap_total = 0;
  for (Index rho = 0; rho < K; ++rho) {
    if (!sys.up[rho])
      throw std::invalid_argument("permutation: residue class " + std::to_string(rho) +
                                  " is not covered upward");
    if (!sys.down[rho])
      throw std::invalid_argument("permutation: residue class " + std::to_string(rho) +
                                  " is not covered downward");
    Index vu = sys.up[rho]->start, vd = sys.down[rho]->start;
    if (vd >= vu)
      throw std::invalid_argument("permutation: tail progressions overlap in residue class " +
                                  std::to_string(rho));
    gap_total += (vu - vd) / K - 1;
  }
  if (gap_total != Index(window.size()))
    throw std::invalid_argument("permutation: window size does not match the tail gaps");

  std::set<Index> images;
  for (Index i = 0; i < Index(window.size()); ++i) {
    Index w = window[i];
    if (!images.insert(w).second)
      throw std::invalid_argument("permutation: duplicate window image");
    Index rho = floormod(w, K);
    if (w <= sys.down[rho]->start || w >= sys.up[rho]->start)
      throw std::invalid_argument("permutation: window image collides with a tail progression");
    sys.gap_preimage[w] = window_lo + i;
  }
  // gap_total == |window| and every image sits in a gap, so gaps are filled.
  return sys;
}

}  // namespace

void TailMap::minimize() {
  auto eval = [&](Index i) { return offset[floormod(i, period)] + floordiv(i, period) * step[floormod(i, period)]; };
  for (Index d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    std::vector<Index> off(d), st(d);
    bool ok = true;
    for (Index r = 0; r < d && ok; ++r) {
      st[r] = eval(r + d) - eval(r);
      off[r] = eval(r);
      if (st[r] == 0) {
        ok = false;
        break;
      }
      for (Index i = r; i < 2 * period && ok; i += d)
        ok = eval(i) == off[r] + floordiv(i, d) * st[r];
    }
    if (ok) {
      period = d;
      offset = std::move(off);
      step = std::move(st);
      return;
    }
  }
}

FinPermutation::FinPermutation(Index window_lo, std::vector<Index> window, TailMap left,
                               TailMap right)
    : window_lo_(window_lo), window_(std::move(window)), left_(std::move(left)),
      right_(std::move(right)) {
  canonicalize();
  verify_bijection();
}

void FinPermutation::canonicalize() {
  left_.minimize();
  right_.minimize();
  while (!window_.empty() && window_.back() == right_.at(window_hi())) window_.pop_back();
  while (!window_.empty() && window_.front() == left_.at(window_lo_)) {
    window_.erase(window_.begin());
    ++window_lo_;
  }
  if (!window_.empty()) return;
  if (left_ == right_) {
    window_lo_ = 0;
    return;
  }
  Index guard = 2 * lcm_checked(left_.period, right_.period) + 4;
  while (guard-- > 0 && left_.at(window_lo_ - 1) == right_.at(window_lo_ - 1)) --window_lo_;
  assert(left_.at(window_lo_ - 1) != right_.at(window_lo_ - 1));
}

void FinPermutation::verify_bijection() const { build_rays(window_lo_, window_, left_, right_); }

FinPermutation FinPermutation::identity() { return FinPermutation(0, {}, TailMap{}, TailMap{}); }

FinPermutation FinPermutation::shift(Index n) {
  TailMap t{1, {n}, {1}};
  return FinPermutation(0, {}, t, t);
}

FinPermutation FinPermutation::tau() {
  TailMap t{1, {-1}, {-1}};
  return FinPermutation(0, {}, t, t);
}

FinPermutation FinPermutation::negate() {
  TailMap t{1, {0}, {-1}};
  return FinPermutation(0, {}, t, t);
}

FinPermutation FinPermutation::reflect_about_half() {
  TailMap t{1, {1}, {-1}};
  return FinPermutation(0, {}, t, t);
}

FinPermutation FinPermutation::transposition(Index a, Index b) {
  if (a == b) return identity();
  Index lo = std::min(a, b), hi = std::max(a, b);
  std::vector<Index> w;
  for (Index i = lo; i <= hi; ++i) w.push_back(i == a ? b : (i == b ? a : i));
  return FinPermutation(lo, std::move(w), TailMap{}, TailMap{});
}

FinPermutation FinPermutation::pair_swap() {
  TailMap t{2, {1, 0}, {2, 2}};
  return FinPermutation(0, {}, t, t);
}

Index FinPermutation::at(Index i) const {
  if (i < window_lo_) return left_.at(i);
  if (i > window_hi()) return right_.at(i);
  return window_[i - window_lo_];
}

bool FinPermutation::is_identity() const {
  return window_.empty() && left_ == TailMap{} && right_ == TailMap{};
}

FinPermutation FinPermutation::inverse() const {
  RaySystem sys = build_rays(window_lo_, window_, left_, right_);
  Index K = sys.K;
  TailMap right_inv{K, std::vector<Index>(K), std::vector<Index>(K)};
  TailMap left_inv{K, std::vector<Index>(K), std::vector<Index>(K)};
  Index lo = 0, hi = -1;
  for (Index rho = 0; rho < K; ++rho) {
    const Ray& u = *sys.up[rho];
    right_inv.offset[rho] = u.cls + u.k_side * ((rho - u.offset) / u.step);
    right_inv.step[rho] = u.k_side * (K / u.step);
    const Ray& d = *sys.down[rho];
    left_inv.offset[rho] = d.cls + d.k_side * ((rho - d.offset) / d.step);
    left_inv.step[rho] = d.k_side * (K / d.step);
    hi = std::max(hi, u.start - 1);
    lo = rho == 0 ? d.start + 1 : std::min(lo, d.start + 1);
  }
  if (lo > hi) {
    lo = 0;
    hi = -1;
  }
  std::vector<Index> w;
  for (Index x = lo; x <= hi; ++x) {
    auto it = sys.gap_preimage.find(x);
    if (it != sys.gap_preimage.end()) {
      w.push_back(it->second);
      continue;
    }
    Index rho = floormod(x, K);
    if (x >= sys.up[rho]->start)
      w.push_back(right_inv.offset[rho] + floordiv(x, K) * right_inv.step[rho]);
    else if (x <= sys.down[rho]->start)
      w.push_back(left_inv.offset[rho] + floordiv(x, K) * left_inv.step[rho]);
    else
      throw std::logic_error("permutation: uncovered value while inverting");
  }
  return FinPermutation(lo, std::move(w), left_inv, right_inv);
}

FinPermutation compose(const FinPermutation& s, const FinPermutation& t) {
  // Beyond the bounds computed here, t lands in one of s's tail regimes and
  // the composite is an arithmetic progression per residue class.
  const Index s_lo = s.window_lo(), s_hi = s.window_hi();

  auto right_period = [&]() {
    Index k = t.right_tail().period, acc = 1;
    for (Index r = 0; r < k; ++r) {
      Index step = t.right_tail().step[r];
      Index ps = step > 0 ? s.right_tail().period : s.left_tail().period;
      acc = lcm_checked(acc, ps / std::gcd(std::abs(step), ps));
    }
    return k * acc;
  };
  auto left_period = [&]() {
    Index k = t.left_tail().period, acc = 1;
    for (Index r = 0; r < k; ++r) {
      Index step = t.left_tail().step[r];
      Index ps = step > 0 ? s.left_tail().period : s.right_tail().period;
      acc = lcm_checked(acc, ps / std::gcd(std::abs(step), ps));
    }
    return k * acc;
  };

  Index R = t.window_hi();
  for (Index r = 0; r < t.right_tail().period; ++r) {
    Index step = t.right_tail().step[r], off = t.right_tail().offset[r];
    Index k = t.right_tail().period;
    Index m_min = floordiv(t.window_hi() - r, k) + 1;
    Index m_thr = step > 0 ? ceildiv(s_hi + 1 - off, step) : ceildiv(off - s_lo + 1, -step);
    m_thr = std::max(m_thr, m_min);
    R = std::max(R, r + m_thr * k);
  }
  Index L = t.window_lo();
  for (Index r = 0; r < t.left_tail().period; ++r) {
    Index step = t.left_tail().step[r], off = t.left_tail().offset[r];
    Index k = t.left_tail().period;
    Index m_max = floordiv(t.window_lo() - 1 - r, k);
    Index m_thr = step > 0 ? floordiv(s_lo - 1 - off, step) : floordiv(s_hi + 1 - off, step);
    m_thr = std::min(m_thr, m_max);
    L = std::min(L, r + m_thr * k);
  }

  auto f = [&](Index i) { return s.at(t.at(i)); };

  Index kr = right_period();
  TailMap right{kr, std::vector<Index>(kr), std::vector<Index>(kr)};
  for (Index r = 0; r < kr; ++r) {
    Index i1 = R + 1 + floormod(r - (R + 1), kr);
    Index v1 = f(i1), v2 = f(i1 + kr), v3 = f(i1 + 2 * kr);
    if (v2 - v1 != v3 - v2 || v2 == v1)
      throw std::logic_error("permutation: composite tail is not an arithmetic progression");
    right.step[r] = v2 - v1;
    right.offset[r] = v1 - floordiv(i1, kr) * right.step[r];
  }
  Index kl = left_period();
  TailMap left{kl, std::vector<Index>(kl), std::vector<Index>(kl)};
  for (Index r = 0; r < kl; ++r) {
    Index i1 = L - 1 - floormod((L - 1) - r, kl);
    Index v1 = f(i1), v2 = f(i1 - kl), v3 = f(i1 - 2 * kl);
    if (v1 - v2 != v2 - v3 || v2 == v1)
      throw std::logic_error("permutation: composite tail is not an arithmetic progression");
    left.step[r] = v1 - v2;
    left.offset[r] = v1 - floordiv(i1, kl) * left.step[r];
  }

  std::vector<Index> w;
  for (Index i = L; i <= R; ++i) w.push_back(f(i));
  return FinPermutation(L, std::move(w), left, right);
}

ParityFunction act_on_parity(const FinPermutation& sigma, const ParityFunction& p) {
  const Index p_lo = p.window_lo(), p_hi = p.window_hi();

  auto side_period = [&](const TailMap& tail, bool to_plus_infinity_when_step_positive) {
    Index acc = 1;
    for (Index r = 0; r < tail.period; ++r) {
      Index step = tail.step[r];
      bool lands_right = (step > 0) == to_plus_infinity_when_step_positive;
      Index ps = lands_right ? p.right_tail().period() : p.left_tail().period();
      acc = lcm_checked(acc, ps / std::gcd(std::abs(step), ps));
    }
    return tail.period * acc;
  };

  Index R = sigma.window_hi();
  for (Index r = 0; r < sigma.right_tail().period; ++r) {
    Index step = sigma.right_tail().step[r], off = sigma.right_tail().offset[r];
    Index k = sigma.right_tail().period;
    Index m_min = floordiv(sigma.window_hi() - r, k) + 1;
    Index m_thr = step > 0 ? ceildiv(p_hi + 1 - off, step) : ceildiv(off - p_lo + 1, -step);
    m_thr = std::max(m_thr, m_min);
    R = std::max(R, r + m_thr * k);
  }
  Index L = sigma.window_lo();
  for (Index r = 0; r < sigma.left_tail().period; ++r) {
    Index step = sigma.left_tail().step[r], off = sigma.left_tail().offset[r];
    Index k = sigma.left_tail().period;
    Index m_max = floordiv(sigma.window_lo() - 1 - r, k);
    Index m_thr = step > 0 ? floordiv(p_lo - 1 - off, step) : floordiv(p_hi + 1 - off, step);
    m_thr = std::min(m_thr, m_max);
    L = std::min(L, r + m_thr * k);
  }

  auto f = [&](Index i) { return p.at(sigma.at(i)); };

  Index kr = side_period(sigma.right_tail(), true);
  std::vector<Parity> rword(kr);
  for (Index r = 0; r < kr; ++r) {
    Index i1 = R + 1 + floormod(r - (R + 1), kr);
    rword[r] = f(i1);
    if (f(i1 + kr) != rword[r])
      throw std::logic_error("act_on_parity: derived period is not a period");
  }
  Index kl = side_period(sigma.left_tail(), false);
  std::vector<Parity> lword(kl);
  for (Index r = 0; r < kl; ++r) {
    Index i1 = L - 1 - floormod((L - 1) - r, kl);
    lword[floormod(i1, kl)] = f(i1);
    if (f(i1 - kl) != f(i1)) throw std::logic_error("act_on_parity: derived period is not a period");
  }

  std::vector<Parity> w;
  for (Index i = L; i <= R; ++i) w.push_back(f(i));
  return ParityFunction(L, std::move(w), TailRule{lword}, TailRule{rword});
}

std::string group_name(GroupTag g) {
  switch (g) {
    case GroupTag::Sc: return "Sc";
    case GroupTag::So: return "So";
    case GroupTag::Sn: return "Sn";
    case GroupTag::Sm: return "Sm";
    case GroupTag::Sl: return "Sl";
    case GroupTag::Sg: return "Sg";
    case GroupTag::SZ: return "SZ";
  }
  return "?";
}

std::optional<Index> displacement_bound(const FinPermutation& sigma) {
  for (const TailMap* t : {&sigma.left_tail(), &sigma.right_tail()})
    for (Index s : t->step)
      if (s != t->period) return std::nullopt;
  Index c = 0;
  for (const TailMap* t : {&sigma.left_tail(), &sigma.right_tail()})
    for (Index r = 0; r < t->period; ++r) c = std::max(c, std::abs(t->offset[r] - r));
  for (Index i = sigma.window_lo(); i <= sigma.window_hi(); ++i)
    c = std::max(c, std::abs(sigma.at(i) - i));
  return c;
}

Index left_image_bound(const FinPermutation& sigma) {
  Index best = sigma.at(0);
  for (Index i = sigma.window_lo(); i <= std::min(Index(0), sigma.window_hi()); ++i)
    best = std::max(best, sigma.at(i));
  const TailMap& lt = sigma.left_tail();
  for (Index r = 0; r < lt.period; ++r) {
    if (lt.step[r] <= 0) throw std::domain_error("left_image_bound: left tail escapes upward");
    Index m_max = floordiv(std::min(Index(0), sigma.window_lo() - 1) - r, lt.period);
    best = std::max(best, lt.offset[r] + m_max * lt.step[r]);
  }
  // Right-tail slots at or below zero, when the window ends below zero.
  for (Index i = sigma.window_hi() + 1; i <= 0; ++i) best = std::max(best, sigma.at(i));
  return best + 1;
}

namespace {

bool all_steps_positive(const FinPermutation& sigma) {
  for (const TailMap* t : {&sigma.left_tail(), &sigma.right_tail()})
    for (Index s : t->step)
      if (s <= 0) return false;
  return true;
}

// Smallest bound B with sigma(i)/i > 0 whenever |i| > B; requires all tail
// steps positive.
Index same_sign_bound(const FinPermutation& sigma) {
  Index B = std::max(std::abs(sigma.window_lo()), std::abs(sigma.window_hi()));
  const TailMap& rt = sigma.right_tail();
  for (Index r = 0; r < rt.period; ++r) {
    // first m in the tail with value >= 1
    Index m = std::max(ceildiv(1 - rt.offset[r], rt.step[r]),
                       floordiv(sigma.window_hi() - r, rt.period) + 1);
    B = std::max(B, std::abs(r + m * rt.period));
  }
  const TailMap& lt = sigma.left_tail();
  for (Index r = 0; r < lt.period; ++r) {
    // last m in the tail with value <= -1
    Index m = std::min(floordiv(-1 - lt.offset[r], lt.step[r]),
                       floordiv(sigma.window_lo() - 1 - r, lt.period));
    B = std::max(B, std::abs(r + m * lt.period));
  }
  return B;
}

}  // namespace

MembershipCertificate membership(const FinPermutation& sigma, GroupTag group) {
  MembershipCertificate cert;
  cert.group = group;

  auto bound = displacement_bound(sigma);
  bool in_g = all_steps_positive(sigma);

  switch (group) {
    case GroupTag::SZ:
      cert.member = true;
      cert.note = "verified bijection of Z";
      break;
    case GroupTag::Sc:
    case GroupTag::So:
    case GroupTag::Sn:
      if (bound) {
        cert.member = true;
        cert.witness = Rational(long(*bound));
        cert.note = group == GroupTag::Sc
                        ? "largest displacement |sigma(i) - i|"
                        : "bounded displacement; on this grammar the class equals Sc";
      } else {
        cert.member = false;
        cert.note = "some tail class has step != period, so displacement grows linearly";
      }
      break;
    case GroupTag::Sm: {
      bool all_stretch = true;
      for (const TailMap* t : {&sigma.left_tail(), &sigma.right_tail()})
        for (Index s : t->step)
          if (s == t->period) all_stretch = false;
      cert.member = in_g && (bound.has_value() || all_stretch);
      if (!in_g)
        cert.note = "not in Sg: a tail crosses sign";
      else if (cert.member)
        cert.note = bound ? "displacement ratio tends to zero"
                          : "displacement ratio is bounded away from zero and infinity";
      else
        cert.note = "mixed tail classes: displacement ratio has liminf zero but limsup positive";
      break;
    }
    case GroupTag::Sl:
      cert.member = in_g;
      if (in_g) {
        cert.witness = make_rational(1, 2);
        cert.note = "displacement is at most linear; any exponent below 1 works";
      } else {
        cert.note = "not in Sg: a tail crosses sign";
      }
      break;
    case GroupTag::Sg:
      cert.member = in_g;
      if (in_g) {
        cert.witness = Rational(long(same_sign_bound(sigma)));
        cert.note = "sigma(i)/i > 0 beyond the witness bound";
      } else {
        cert.note = "a tail progression maps one end of Z into the other";
      }
      break;
  }
  return cert;
}

}  // namespace superglinf
