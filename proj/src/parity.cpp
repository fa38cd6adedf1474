#include "superglinf/parity.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace superglinf {

TailRule TailRule::periodic(const std::string& bits) {
  if (bits.empty()) throw std::invalid_argument("tail: empty periodic word");
  TailRule r;
  for (char c : bits) {
    if (c == '0')
      r.word.push_back(Parity::even);
    else if (c == '1')
      r.word.push_back(Parity::odd);
    else
      throw std::invalid_argument("tail: word must consist of 0s and 1s");
  }
  return r;
}

Index TailRule::odd_per_period() const {
  return std::count(word.begin(), word.end(), Parity::odd);
}

Index TailRule::max_run() const {
  Index k = period();
  if (odd_per_period() == 0 || odd_per_period() == k) return -1;
  // Scan two periods so runs wrapping the period boundary are seen whole.
  Index best = 0, run = 0;
  for (Index i = 0; i < 2 * k; ++i) {
    if (i > 0 && word[floormod(i, k)] == word[floormod(i - 1, k)])
      ++run;
    else
      run = 1;
    best = std::max(best, run);
  }
  return best;
}

void TailRule::minimize() {
  Index k = period();
  for (Index d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    bool ok = true;
    for (Index j = 0; j < k && ok; ++j) ok = word[j] == word[j % d];
    if (ok) {
      word.resize(d);
      return;
    }
  }
}

std::string TailRule::bits() const {
  std::string s;
  for (Parity v : word) s.push_back(parity_char(v));
  return s;
}

TailRule TailRule::flipped() const {
  TailRule r = *this;
  for (Parity& v : r.word) v = flip(v);
  return r;
}

ParityFunction::ParityFunction(Index window_lo, std::vector<Parity> window, TailRule left,
                               TailRule right)
    : window_lo_(window_lo), window_(std::move(window)), left_(std::move(left)),
      right_(std::move(right)) {
  if (left_.word.empty() || right_.word.empty())
    throw std::invalid_argument("parity function: empty tail word");
  canonicalize();
}

ParityFunction ParityFunction::p_st() { return periodic("01"); }

ParityFunction ParityFunction::p_plus() {
  return ParityFunction(0, {}, TailRule::constant(Parity::even), TailRule::constant(Parity::odd));
}

ParityFunction ParityFunction::constant(Parity v) {
  return ParityFunction(0, {}, TailRule::constant(v), TailRule::constant(v));
}

ParityFunction ParityFunction::periodic(const std::string& bits) {
  TailRule t = TailRule::periodic(bits);
  return ParityFunction(0, {}, t, t);
}

Parity ParityFunction::at(Index i) const {
  if (i < window_lo_) return left_.at(i);
  if (i > window_hi()) return right_.at(i);
  return window_[i - window_lo_];
}

void ParityFunction::canonicalize() {
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
  // Hand as much as possible to the right rule; two distinct minimal periodic
  // rules disagree within any lcm-length stretch, so this terminates.
  Index guard = lcm_checked(left_.period(), right_.period()) + 1;
  while (guard-- > 0 && left_.at(window_lo_ - 1) == right_.at(window_lo_ - 1)) --window_lo_;
  assert(left_.at(window_lo_ - 1) != right_.at(window_lo_ - 1));
}

Index ParityFunction::odd_count(Index a, Index b) const {
  if (a > b) throw std::invalid_argument("odd_count: a > b");
  Index total = 0;
  // Left-tail part, window part, right-tail part of [a, b].
  auto count_rule = [](const TailRule& t, Index lo, Index hi) -> Index {
    if (lo > hi) return 0;
    Index k = t.period();
    Index per = t.odd_per_period();
    Index full = (hi - lo + 1) / k;
    Index c = full * per;
    for (Index i = lo + full * k; i <= hi; ++i)
      if (t.at(i) == Parity::odd) ++c;
    return c;
  };
  Index wl = window_lo_, wh = window_hi();
  if (a < wl) total += count_rule(left_, a, std::min(b, wl - 1));
  for (Index i = std::max(a, wl); i <= std::min(b, wh); ++i)
    if (window_[i - wl] == Parity::odd) ++total;
  if (b > wh) total += count_rule(right_, std::max(a, wh + 1), b);
  return total;
}

bool ParityFunction::infinitely_many_below(Index b, Parity v) const {
  (void)b;  // any left-tail occurrence repeats below every bound
  Index odd = left_.odd_per_period();
  return v == Parity::odd ? odd > 0 : odd < left_.period();
}

bool ParityFunction::infinitely_many_above(Index a, Parity v) const {
  (void)a;
  Index odd = right_.odd_per_period();
  return v == Parity::odd ? odd > 0 : odd < right_.period();
}

Index ParityFunction::count_below(Index b, Parity v) const {
  if (infinitely_many_below(b, v)) throw std::logic_error("count_below: infinite");
  Index lo = std::min(window_lo_, b);  // below lo the left tail contributes nothing
  Index c = 0;
  for (Index i = lo; i <= b; ++i)
    if (at(i) == v) ++c;
  return c;
}

Index ParityFunction::count_above(Index a, Parity v) const {
  if (infinitely_many_above(a, v)) throw std::logic_error("count_above: infinite");
  Index hi = std::max(window_hi(), a);
  Index c = 0;
  for (Index i = a; i <= hi; ++i)
    if (at(i) == v) ++c;
  return c;
}

Index ParityFunction::max_run() const {
  if (left_.constant_rule() || right_.constant_rule()) return -1;
  Index lm = left_.max_run(), rm = right_.max_run();
  if (lm < 0 || rm < 0) return -1;
  // A run touching the window lies inside the window padded by one tail
  // period on each side; pure tail runs are bounded by the rule maxima.
  Index lo = window_lo_ - 2 * left_.period();
  Index hi = window_hi() + 2 * right_.period();
  Index best = std::max(lm, rm), run = 0;
  for (Index i = lo; i <= hi; ++i) {
    if (i > lo && at(i) == at(i - 1))
      ++run;
    else
      run = 1;
    best = std::max(best, run);
  }
  return best;
}

ParityFunction ParityFunction::flipped() const {
  std::vector<Parity> w = window_;
  for (Parity& v : w) v = flip(v);
  return ParityFunction(window_lo_, std::move(w), left_.flipped(), right_.flipped());
}

}  // namespace superglinf
