#include "superglinf/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "superglinf/density_kernel.hpp"

namespace superglinf {

namespace {

ExtNat half_count(const ParityFunction& p, bool below, Parity v) {
  if (below)
    return p.infinitely_many_below(0, v) ? ExtNat::inf() : ExtNat::fin(p.count_below(0, v));
  return p.infinitely_many_above(0, v) ? ExtNat::inf() : ExtNat::fin(p.count_above(0, v));
}

}  // namespace

Classification classify(const ParityFunction& p) {
  Classification c;
  c.counts.odd_neg = half_count(p, true, Parity::odd);
  c.counts.even_neg = half_count(p, true, Parity::even);
  c.counts.odd_pos = half_count(p, false, Parity::odd);
  c.counts.even_pos = half_count(p, false, Parity::even);

  auto total = [&](Parity v) -> ExtNat {
    if (p.infinitely_many_below(0, v) || p.infinitely_many_above(0, v)) return ExtNat::inf();
    return ExtNat::fin(p.count_below(-1, v) + p.count_above(0, v));
  };
  c.odd_total = total(Parity::odd);
  c.even_total = total(Parity::even);
  c.finite = !c.odd_total.infinite || !c.even_total.infinite;

  if (c.finite) {
    c.label = c.even_total.infinite ? "(inf|" + std::to_string(c.odd_total.value) + ")"
                                    : "(" + std::to_string(c.even_total.value) + "|inf)";
  } else if (c.inf_class()) {
    c.label = "Inf";
  } else {
    std::string fins;
    auto note = [&](const ExtNat& n, const char* name) {
      if (n.infinite) return;
      if (!fins.empty()) fins += ",";
      fins += name;
    };
    note(c.counts.odd_neg, "odd_neg");
    note(c.counts.even_neg, "even_neg");
    note(c.counts.odd_pos, "odd_pos");
    note(c.counts.even_pos, "even_pos");
    c.label = "NonFinite(" + fins + " finite)";
  }
  return c;
}

Index odd_count(const ParityFunction& p, Index a, Index b) {
  if (a > b) throw std::invalid_argument("odd_count: a > b");
  return p.odd_count(a, b);
}

Rational density(const ParityFunction& p, Index a, Index b) {
  if (a == b) throw std::invalid_argument("density: empty window");
  Index lo = std::min(a, b), hi = std::max(a, b);
  return make_rational(long(p.odd_count(lo, hi)), long(hi - lo));
}

bool is_tight(const ParityFunction& p, Index c) {
  if (c < 1) throw std::invalid_argument("is_tight: run bound must be positive");
  Index run = p.max_run();
  return run >= 0 && run <= c;
}

namespace {

void validate_schedule(const WindowSchedule& s) {
  if (s.min_exp < 2 || s.max_exp <= s.min_exp || s.max_exp > 26)
    throw std::invalid_argument(
        "window schedule: endpoints must grow with a growing gap (2 <= min_exp < max_exp <= 26)");
}

Rational tail_density(const TailRule& t) {
  return make_rational(long(t.odd_per_period()), long(t.period()));
}

}  // namespace

SpectrumEstimate spectrum(const ParityFunction& p, Side side, WindowSchedule sched) {
  validate_schedule(sched);
  SpectrumEstimate e;
  e.side = side;
  e.exact = true;
  e.lower = e.upper = tail_density(side == Side::right ? p.right_tail() : p.left_tail());
  e.drift = 0;
  return e;
}

SpectrumEstimate spectrum(const BlockProgram& p, Side side, WindowSchedule sched) {
  validate_schedule(sched);
  SpectrumEstimate e;
  e.side = side;
  e.exact = false;

  struct Tiered {
    int exp;
    Rational d;
  };
  std::vector<Tiered> tiered;
  for (int i = sched.min_exp; i <= sched.max_exp; ++i) {
    Index b = Index(1) << ((i + 1) / 2);
    for (Index a : {Index(1) << i, 3 * (Index(1) << (i - 1))}) {
      if (a <= b) continue;
      Index lo = side == Side::right ? b : -a;
      Index hi = side == Side::right ? a : -b;
      Index odd = odd_count_range([&](Index x) { return p.at(x); }, lo, hi);
      Rational d = make_rational(long(odd), long(hi - lo));
      e.samples.push_back({side == Side::right ? b : -b, side == Side::right ? a : -a, d});
      tiered.push_back({i, d});
    }
  }

  auto range_over = [&](int lo_exp, int hi_exp) {
    Rational lo, hi;
    bool first = true;
    for (const auto& t : tiered) {
      if (t.exp < lo_exp || t.exp > hi_exp) continue;
      if (first || t.d < lo) lo = t.d;
      if (first || t.d > hi) hi = t.d;
      first = false;
    }
    return std::make_pair(lo, hi);
  };

  auto [lo_now, hi_now] = range_over(sched.max_exp - 3, sched.max_exp);
  auto [lo_prev, hi_prev] = range_over(sched.max_exp - 4, sched.max_exp - 1);
  e.lower = lo_now;
  e.upper = hi_now;
  e.drift = std::max(abs(lo_now - lo_prev), abs(hi_now - hi_prev));
  return e;
}

namespace {

// Slot-assignment map underlying the normalizer: positions of each parity go,
// in order, to the slots of the same parity in the target layout. `rep` must
// carry every parity that p carries on the corresponding side.
class SlotMap {
 public:
  SlotMap(const ParityFunction& p, const Classification& cls) : p_(p), cls_(cls) {}

  Index operator()(Index x) const {
    Parity v = p_.at(x);
    bool pos_inf = v == Parity::odd ? cls_.counts.odd_pos.infinite : cls_.counts.even_pos.infinite;
    bool neg_inf = v == Parity::odd ? cls_.counts.odd_neg.infinite : cls_.counts.even_neg.infinite;
    if (pos_inf && neg_inf) {
      if (cls_.inf_class()) {
        // The explicit two-case counting formulas, applied verbatim.
        if (x >= 0)
          return v == Parity::even ? 2 * count(Parity::even, 1, x)
                                   : 2 * count(Parity::odd, 0, x) - 1;
        return v == Parity::even ? -2 * (count(Parity::even, x, 0) - 1)
                                 : -(2 * count(Parity::odd, x, -1) - 1);
      }
      Index rank = x >= 0 ? count(v, 0, x) - 1 : -count(v, x, -1);
      return rank >= 0 ? right_slot(v, rank) : left_slot(v, -rank);
    }
    if (pos_inf)  // bounded below: unique order isomorphism from the minimum
      return right_slot(v, p_.count_below(x, v) - 1);
    // bounded above: unique order isomorphism from the maximum
    return left_slot(v, p_.count_above(x, v));
  }

 private:
  Index count(Parity v, Index a, Index b) const {
    if (a > b) return 0;
    return v == Parity::odd ? p_.odd_count(a, b) : p_.even_count(a, b);
  }

  // j-th slot of parity v at or above 0 in the target layout, j >= 0.
  Index right_slot(Parity v, Index j) const {
    bool odd_inf = cls_.counts.odd_pos.infinite, even_inf = cls_.counts.even_pos.infinite;
    if (odd_inf && even_inf) return v == Parity::odd ? 2 * j + 1 : 2 * j;
    return j;  // single-parity half line
  }

  // j-th slot of parity v below 0, descending, j >= 1.
  Index left_slot(Parity v, Index j) const {
    bool odd_inf = cls_.counts.odd_neg.infinite, even_inf = cls_.counts.even_neg.infinite;
    if (odd_inf && even_inf) return v == Parity::odd ? -(2 * j - 1) : -2 * j;
    return -j;
  }

  const ParityFunction& p_;
  const Classification& cls_;
};

// Target layout the slot map fills: per side, alternating slots when both
// parities are infinite there, a constant side otherwise.
ParityFunction representative(const Classification& cls) {
  auto rule = [](bool odd_inf, bool even_inf) {
    if (odd_inf && even_inf) return TailRule::periodic("01");
    return TailRule::constant(odd_inf ? Parity::odd : Parity::even);
  };
  return ParityFunction(0, {},
                        rule(cls.counts.odd_neg.infinite, cls.counts.even_neg.infinite),
                        rule(cls.counts.odd_pos.infinite, cls.counts.even_pos.infinite));
}

// Presents a pointwise slot map as a permutation in the tail grammar. The map
// is an arithmetic progression on each residue class beyond the parity
// function's window, with period equal to the corresponding tail period.
template <class F>
FinPermutation present_slot_map(const ParityFunction& p, F&& f) {
  Index kr = p.right_tail().period();
  Index kl = p.left_tail().period();
  Index R = std::max(p.window_hi(), Index(0)) + kr;
  Index L = std::min(p.window_lo(), Index(-1)) - kl;

  TailMap right{kr, std::vector<Index>(kr), std::vector<Index>(kr)};
  for (Index r = 0; r < kr; ++r) {
    Index i1 = R + 1 + floormod(r - (R + 1), kr);
    Index v1 = f(i1), v2 = f(i1 + kr), v3 = f(i1 + 2 * kr);
    if (v2 - v1 != v3 - v2 || v1 == v2)
      throw std::logic_error("slot map: right tail is not an arithmetic progression");
    right.step[r] = v2 - v1;
    right.offset[r] = v1 - floordiv(i1, kr) * right.step[r];
  }
  TailMap left{kl, std::vector<Index>(kl), std::vector<Index>(kl)};
  for (Index r = 0; r < kl; ++r) {
    Index i1 = L - 1 - floormod((L - 1) - r, kl);
    Index v1 = f(i1), v2 = f(i1 - kl), v3 = f(i1 - 2 * kl);
    if (v1 - v2 != v2 - v3 || v1 == v2)
      throw std::logic_error("slot map: left tail is not an arithmetic progression");
    left.step[r] = v1 - v2;
    left.offset[r] = v1 - floordiv(i1, kl) * left.step[r];
  }
  std::vector<Index> w;
  for (Index i = L; i <= R; ++i) w.push_back(f(i));
  return FinPermutation(L, std::move(w), left, right);
}

// act_on_parity(normalizer(p), p) == representative(classification of p).
FinPermutation pattern_normalizer(const ParityFunction& p, const Classification& cls) {
  SlotMap slots(p, cls);
  FinPermutation forward = present_slot_map(p, slots);
  FinPermutation n = forward.inverse();
  MembershipCertificate cert = membership(n, GroupTag::Sg);
  if (!cert.member) throw std::logic_error("normalizer: expected an Sg certificate");
  if (!(act_on_parity(n, p) == representative(cls)))
    throw std::logic_error("normalizer: relabelling missed the target layout");
  return n;
}

}  // namespace

FinPermutation sigma_p(const ParityFunction& p) {
  Classification cls = classify(p);
  if (!cls.inf_class())
    throw std::domain_error("sigma_p: all four half-line counts must be infinite");
  return pattern_normalizer(p, cls);
}

FinPermutation EquivalenceWitness::replay() const {
  if (!sigma) throw std::logic_error("witness: no permutation to replay");
  return via_tau ? compose(*sigma, FinPermutation::tau()) : *sigma;
}

bool witness_replays(const EquivalenceWitness& w, const ParityFunction& p1,
                     const ParityFunction& p2) {
  if (!w.equivalent || !w.sigma) return false;
  return act_on_parity(w.replay(), p1) == p2;
}

namespace {

EquivalenceWitness finite_equivalence(const ParityFunction& p1, const ParityFunction& p2,
                                      const Classification& c1, const Classification& c2) {
  EquivalenceWitness w;
  w.group = GroupTag::Sc;
  if (!(c1.odd_total == c2.odd_total) || !(c1.even_total == c2.even_total)) return w;

  // Totals agree, so the constant tails agree and the disagreement set is
  // confined to the union of the windows.
  Index lo = std::min(p1.window_lo(), p2.window_lo());
  Index hi = std::max(p1.window_hi(), p2.window_hi());
  std::vector<Index> odd_src, odd_dst, even_src, even_dst;
  for (Index i = lo; i <= hi; ++i) {
    if (p1.at(i) == p2.at(i)) continue;
    if (p2.at(i) == Parity::odd)
      odd_src.push_back(i);
    else
      even_src.push_back(i);
    if (p1.at(i) == Parity::odd)
      odd_dst.push_back(i);
    else
      even_dst.push_back(i);
  }
  assert(odd_src.size() == odd_dst.size() && even_src.size() == even_dst.size());

  w.equivalent = true;
  if (odd_src.empty() && even_src.empty()) {
    w.sigma = FinPermutation::identity();
    return w;
  }
  std::map<Index, Index> img;
  for (size_t t = 0; t < odd_src.size(); ++t) img[odd_src[t]] = odd_dst[t];
  for (size_t t = 0; t < even_src.size(); ++t) img[even_src[t]] = even_dst[t];
  Index wlo = img.begin()->first, whi = img.rbegin()->first;
  std::vector<Index> window;
  for (Index i = wlo; i <= whi; ++i) {
    auto it = img.find(i);
    window.push_back(it == img.end() ? i : it->second);
  }
  w.sigma = FinPermutation(wlo, std::move(window), TailMap{}, TailMap{});
  return w;
}

}  // namespace

EquivalenceWitness equivalent(const ParityFunction& p1, const ParityFunction& p2, GroupTag group) {
  Classification c1 = classify(p1), c2 = classify(p2);

  switch (group) {
    case GroupTag::Sc: {
      if (!c1.finite || !c2.finite)
        throw std::domain_error("equivalent: Sc comparison requires finite parity functions");
      return finite_equivalence(p1, p2, c1, c2);
    }
    case GroupTag::Sg: {
      if (c1.finite || c2.finite)
        throw std::domain_error("equivalent: Sg comparison requires non-finite parity functions");
      EquivalenceWitness w;
      w.group = GroupTag::Sg;
      if (c1.pattern() == c2.pattern()) {
        w.equivalent = true;
        w.sigma = compose(pattern_normalizer(p1, c1), pattern_normalizer(p2, c2).inverse());
        return w;
      }
      ParityFunction q2 = act_on_parity(FinPermutation::tau(), p2);
      Classification cq = classify(q2);
      if (c1.pattern() == cq.pattern()) {
        w.equivalent = true;
        w.via_tau = true;
        w.sigma = compose(pattern_normalizer(p1, c1), pattern_normalizer(q2, cq).inverse());
        return w;
      }
      return w;
    }
    case GroupTag::Sn: {
      if (!c1.inf_class() || !c2.inf_class())
        throw std::domain_error(
            "equivalent: Sn comparison requires tight functions with one-point spectra");
      EquivalenceWitness w;
      w.group = GroupTag::Sn;
      auto dl1 = spectrum(p1, Side::left).lower, dr1 = spectrum(p1, Side::right).lower;
      auto dl2 = spectrum(p2, Side::left).lower, dr2 = spectrum(p2, Side::right).lower;
      bool direct = dl1 == dl2 && dr1 == dr2;
      bool mirrored = dl1 == dr2 && dr1 == dl2;
      if (!direct && !mirrored) return w;
      ParityFunction q2 = direct ? p2 : act_on_parity(FinPermutation::tau(), p2);
      w.equivalent = true;
      w.via_tau = !direct;
      w.sigma = compose(sigma_p(p1), sigma_p(q2).inverse());
      MembershipCertificate cert = membership(*w.sigma, GroupTag::Sn);
      if (!cert.member)
        throw std::logic_error("equivalent: matching spectra must yield an Sn witness");
      return w;
    }
    default:
      throw std::domain_error("equivalent: unsupported group " + group_name(group));
  }
}

}  // namespace superglinf
