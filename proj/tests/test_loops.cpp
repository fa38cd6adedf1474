#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "superglinf/loops.hpp"

using namespace superglinf;

namespace {

PeriodicBandMatrix random_periodic(gen::Rng& rng, Index k, Index band, const ParityFunction& p,
                                   PeriodicType type) {
  PeriodicBandMatrix m(k, band, p, type);
  Index cells = gen::pick(rng, 1, 2 * k);
  for (Index t = 0; t < cells; ++t) {
    Index r = gen::pick(rng, 0, k - 1);
    m.set_cell(r, r + gen::pick(rng, -band, band), gen::scalar(rng));
  }
  return m;
}

ParityFunction periodic_parity(gen::Rng& rng, Index k) {
  std::string bits;
  for (Index t = 0; t < k; ++t) bits.push_back(gen::pick(rng, 0, 1) ? '1' : '0');
  return ParityFunction::periodic(bits);
}

// k-antiperiodic parity: word of length 2k with the second half flipped.
ParityFunction antiperiodic_parity(gen::Rng& rng, Index k) {
  std::string bits;
  for (Index t = 0; t < k; ++t) bits.push_back(gen::pick(rng, 0, 1) ? '1' : '0');
  std::string full = bits;
  for (char c : bits) full.push_back(c == '0' ? '1' : '0');
  return ParityFunction::periodic(full);
}

}  // namespace

TEST_CASE("periodic matrices expose shift-invariant entries") {
  ParityFunction st = ParityFunction::p_st();
  PeriodicBandMatrix m(2, 1, st, PeriodicType::A);
  m.set_cell(0, 1, make_rational(3));
  CHECK(m.at(0, 1) == 3);
  CHECK(m.at(2, 3) == 3);
  CHECK(m.at(-2, -1) == 3);
  CHECK(m.at(1, 2) == 0);
  CHECK_THROWS_AS(m.set_cell(0, 5, make_rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(m.set_cell(2, 2, make_rational(1)), std::invalid_argument);
  // wrong periodicity of the parity function
  CHECK_THROWS_AS(PeriodicBandMatrix(1, 0, st, PeriodicType::A), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicBandMatrix(2, 0, st, PeriodicType::B), std::invalid_argument);
  // p_st is 1-antiperiodic
  PeriodicBandMatrix b(1, 1, st, PeriodicType::B);
  b.set_cell(0, 1, make_rational(1));
  CHECK(b.at(3, 4) == 1);
}

TEST_CASE("scalar loop case: shifts commute") {
  ParityFunction ev = ParityFunction::constant(Parity::even);
  PeriodicBandMatrix up(1, 1, ev, PeriodicType::A);
  up.set_cell(0, 1, make_rational(1));
  PeriodicBandMatrix down(1, 1, ev, PeriodicType::A);
  down.set_cell(0, -1, make_rational(1));
  CHECK(periodic_bracket(up, down).cells().empty());

  PeriodicBandMatrix d1(1, 0, ev, PeriodicType::A);
  d1.set_cell(0, 0, make_rational(5));
  PeriodicBandMatrix d2(1, 0, ev, PeriodicType::A);
  d2.set_cell(0, 0, make_rational(-2, 3));
  CHECK(periodic_bracket(d1, d2).cells().empty());
}

TEST_CASE("periodic bracket agrees with the dense bracket on a window") {
  gen::Rng rng(211);
  for (int t = 0; t < 60; ++t) {
    Index k = gen::pick(rng, 1, 4), band = gen::pick(rng, 0, 3);
    bool anti = gen::pick(rng, 0, 1) == 1;
    ParityFunction p = anti ? antiperiodic_parity(rng, k) : periodic_parity(rng, k);
    PeriodicType type = anti ? PeriodicType::B : PeriodicType::A;
    PeriodicBandMatrix x = random_periodic(rng, k, band, p, type);
    PeriodicBandMatrix y = random_periodic(rng, k, band, p, type);
    PeriodicBandMatrix c = periodic_bracket(x, y);

    const Index W = 40;
    oracle::Dense dx = oracle::densify(x.window(-W, W), -W, W);
    oracle::Dense dy = oracle::densify(y.window(-W, W), -W, W);
    oracle::Dense dc = oracle::dense_bracket(p, dx, dy);
    // interior entries, where the truncation cannot bite
    Index margin = 2 * band + k;
    for (Index i = -W + margin; i <= W - margin; ++i)
      for (Index j = i - c.band(); j <= i + c.band(); ++j) CHECK(dc.at(i, j) == c.at(i, j));
  }
}

TEST_CASE("residue transform on elementary cases") {
  ParityFunction st = ParityFunction::p_st();
  PeriodicBandMatrix id2(2, 0, st, PeriodicType::A);
  id2.set_cell(0, 0, make_rational(1));
  id2.set_cell(1, 1, make_rational(1));
  LaurentMatrix l = to_loop(id2);
  CHECK(l.entry(0, 0).at(0) == 1);
  CHECK(l.entry(1, 1).at(0) == 1);
  CHECK(l.entry(0, 1).empty());

  ParityFunction ev = ParityFunction::constant(Parity::even);
  PeriodicBandMatrix shift3(1, 3, ev, PeriodicType::A);
  shift3.set_cell(0, 3, make_rational(1));
  LaurentMatrix ls = to_loop(shift3);
  CHECK(ls.entry(0, 0).size() == 1);
  CHECK(ls.entry(0, 0).at(3) == 1);

  PeriodicBandMatrix anti(1, 0, st, PeriodicType::B);
  CHECK_THROWS_AS((void)to_loop(anti), std::invalid_argument);
}

TEST_CASE("residue transform is an injective bracket homomorphism") {
  gen::Rng rng(223);
  for (int t = 0; t < 80; ++t) {
    Index k = gen::pick(rng, 1, 4), band = gen::pick(rng, 0, 3);
    ParityFunction p = periodic_parity(rng, k);
    PeriodicBandMatrix x = random_periodic(rng, k, band, p, PeriodicType::A);
    PeriodicBandMatrix y = random_periodic(rng, k, band, p, PeriodicType::A);
    CHECK(to_loop(periodic_bracket(x, y)) == loop_bracket(to_loop(x), to_loop(y)));
    if (!x.cells().empty()) CHECK_FALSE(to_loop(x).zero());
  }
}

TEST_CASE("residue counts split the period") {
  gen::Rng rng(227);
  for (int t = 0; t < 40; ++t) {
    Index k = gen::pick(rng, 1, 5);
    ParityFunction p = periodic_parity(rng, k);
    Index m = p.even_count(1, k), n = p.odd_count(1, k);
    CHECK(m + n == k);
    PeriodicBandMatrix x(k, 0, p, PeriodicType::A);
    LaurentMatrix l = to_loop(x);
    Index odd = 0;
    for (Index r = 0; r < k; ++r)
      if (l.residue_parity(r) == Parity::odd) ++odd;
    CHECK(odd == p.odd_count(0, k - 1));
  }
}

TEST_CASE("laurent grid printing") {
  ParityFunction ev = ParityFunction::constant(Parity::even);
  PeriodicBandMatrix m(1, 2, ev, PeriodicType::A);
  m.set_cell(0, -1, make_rational(3));
  m.set_cell(0, 0, make_rational(1));
  m.set_cell(0, 2, make_rational(-2));
  CHECK(to_loop(m).str() == "[ 3t^-1 + 1 - 2t^2 ]\n");
}

TEST_CASE("defining relations of the classical-type subalgebras") {
  ParityFunction st = ParityFunction::p_st();

  // q: the pair swap commutes with this matrix
  SuperMatrix a = SuperMatrix::unit(st, 0, 2) + SuperMatrix::unit(st, 1, 3);
  CHECK(subalgebra_member(a, InvolutionSpec::type_q(FinPermutation::pair_swap())));
  CHECK_FALSE(subalgebra_member(SuperMatrix::unit(st, 0, 2),
                                InvolutionSpec::type_q(FinPermutation::pair_swap())));

  // D: a single elementary matrix misses its partner
  ParityFunction ev = ParityFunction::constant(Parity::even);
  CHECK_FALSE(subalgebra_member(SuperMatrix::unit(ev, 0, 2), InvolutionSpec::type_D()));
  // ... and the self-paired position is forced to vanish outright
  CHECK_FALSE(subalgebra_member(SuperMatrix::unit(ev, 0, 1), InvolutionSpec::type_D()));

  // B needs parity even at zero
  ParityFunction bad(0, {Parity::odd}, TailRule::periodic("01"), TailRule::periodic("01"));
  CHECK_THROWS_AS((void)subalgebra_member(SuperMatrix::unit(bad, 0, 1), InvolutionSpec::type_B()),
                  std::domain_error);
  // the standard parity flips across the half-integer mirror, so pe accepts
  // it and D rejects it
  CHECK_FALSE(subalgebra_member(SuperMatrix::unit(st, 0, 2), InvolutionSpec::type_pe()));
  CHECK_THROWS_AS((void)subalgebra_member(SuperMatrix::unit(st, 0, 1), InvolutionSpec::type_D()),
                  std::domain_error);
  CHECK_THROWS_AS((void)subalgebra_member(SuperMatrix::unit(ev, 0, 1), InvolutionSpec::type_pe()),
                  std::domain_error);
}

namespace {

ParityFunction mirror_symmetric_parity(gen::Rng& rng) {
  // p(i) = p(-i), p(0) = 0: even word reflected around zero
  std::string half;
  Index len = gen::pick(rng, 1, 3);
  for (Index t = 0; t < len; ++t) half.push_back(gen::pick(rng, 0, 1) ? '1' : '0');
  std::vector<Parity> window;
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    window.push_back(*it == '1' ? Parity::odd : Parity::even);
  window.push_back(Parity::even);
  for (char c : half) window.push_back(c == '1' ? Parity::odd : Parity::even);
  return ParityFunction(-len, std::move(window), TailRule::constant(Parity::even),
                        TailRule::constant(Parity::even));
}

ParityFunction half_mirror_parity(gen::Rng& rng, bool flipped) {
  // p(i) = p(1-i) when flipped is false, p(i) = p(1-i) + 1 when true
  std::string half;
  Index len = gen::pick(rng, 1, 3);
  for (Index t = 0; t < len; ++t) half.push_back(gen::pick(rng, 0, 1) ? '1' : '0');
  std::vector<Parity> window;
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    Parity v = *it == '1' ? Parity::odd : Parity::even;
    window.push_back(flipped ? superglinf::flip(v) : v);
  }
  for (char c : half) window.push_back(c == '1' ? Parity::odd : Parity::even);
  return ParityFunction(-len + 1, std::move(window),
                        TailRule::constant(flipped ? Parity::odd : Parity::even),
                        TailRule::constant(Parity::even));
}

InvolutionSpec spec_for(InvolutionSpec::Kind kind) {
  switch (kind) {
    case InvolutionSpec::Kind::B: return InvolutionSpec::type_B();
    case InvolutionSpec::Kind::D: return InvolutionSpec::type_D();
    case InvolutionSpec::Kind::pe: return InvolutionSpec::type_pe();
    default: return InvolutionSpec::type_q(FinPermutation::pair_swap());
  }
}

}  // namespace

TEST_CASE("projection is idempotent and its image brackets closed") {
  gen::Rng rng(229);
  for (InvolutionSpec::Kind kind :
       {InvolutionSpec::Kind::B, InvolutionSpec::Kind::D, InvolutionSpec::Kind::pe,
        InvolutionSpec::Kind::q}) {
    for (int t = 0; t < 40; ++t) {
      ParityFunction p = kind == InvolutionSpec::Kind::B ? mirror_symmetric_parity(rng)
                         : kind == InvolutionSpec::Kind::D ? half_mirror_parity(rng, false)
                         : kind == InvolutionSpec::Kind::pe
                             ? half_mirror_parity(rng, true)
                             : ParityFunction::p_st();
      InvolutionSpec spec = spec_for(kind);
      SuperMatrix raw = gen::matrix(rng, p, 4, 6);
      SuperMatrix proj = subalgebra_project(raw, spec);
      CHECK(subalgebra_member(proj, spec));
      CHECK(subalgebra_project(proj, spec) == proj);

      SuperMatrix other = subalgebra_project(gen::matrix(rng, p, 4, 6), spec);
      CHECK(subalgebra_member(bracket(proj, other), spec));
    }
  }
}

TEST_CASE("B-type members under the standard parity bracket closed") {
  // p_st is mirror symmetric with even value at zero, so the orthogonal-type
  // relation applies with genuinely odd rows in play
  ParityFunction st = ParityFunction::p_st();
  gen::Rng rng(251);
  for (int t = 0; t < 40; ++t) {
    SuperMatrix a = subalgebra_project(gen::matrix(rng, st, 4, 6), InvolutionSpec::type_B());
    SuperMatrix b = subalgebra_project(gen::matrix(rng, st, 4, 6), InvolutionSpec::type_B());
    CHECK(subalgebra_member(a, InvolutionSpec::type_B()));
    CHECK(subalgebra_member(bracket(a, b), InvolutionSpec::type_B()));
  }
}

TEST_CASE("q-type accepts any admissible pairing") {
  // pair 2r+1 <-> 2r+2 instead of the default 2r <-> 2r+1
  FinPermutation shifted = compose(
      FinPermutation::shift(1), compose(FinPermutation::pair_swap(), FinPermutation::shift(-1)));
  InvolutionSpec spec = InvolutionSpec::type_q(shifted);
  ParityFunction st = ParityFunction::p_st();
  gen::Rng rng(257);
  for (int t = 0; t < 30; ++t) {
    SuperMatrix a = subalgebra_project(gen::matrix(rng, st, 4, 6), spec);
    SuperMatrix b = subalgebra_project(gen::matrix(rng, st, 4, 6), spec);
    CHECK(subalgebra_member(bracket(a, b), spec));
    CHECK(subalgebra_project(a, spec) == a);
  }
  // a pairing with fixed points is rejected at the compatibility check
  CHECK_THROWS_AS((void)subalgebra_member(SuperMatrix::unit(st, 0, 1),
                                          InvolutionSpec::type_q(FinPermutation::identity())),
                  std::domain_error);
}

TEST_CASE("periodic members of the q-type centralizer") {
  ParityFunction st = ParityFunction::p_st();
  PeriodicBandMatrix m(2, 2, st, PeriodicType::A);
  m.set_cell(0, 2, make_rational(1));
  m.set_cell(1, 3, make_rational(1));
  CHECK(subalgebra_member(m, InvolutionSpec::type_q(FinPermutation::pair_swap())));
  PeriodicBandMatrix bad(2, 2, st, PeriodicType::A);
  bad.set_cell(0, 2, make_rational(1));
  CHECK_FALSE(subalgebra_member(bad, InvolutionSpec::type_q(FinPermutation::pair_swap())));
}
