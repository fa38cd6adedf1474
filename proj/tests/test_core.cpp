#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "oracle.hpp"
#include "superglinf/invariants.hpp"
#include "superglinf/support.hpp"

using namespace superglinf;

namespace {

SuperMatrix unit(const ParityFunction& p, Index i, Index j) { return SuperMatrix::unit(p, i, j); }

}  // namespace

TEST_CASE("parity builtins evaluate as defined") {
  ParityFunction st = ParityFunction::p_st();
  ParityFunction pl = ParityFunction::p_plus();
  CHECK(st.at(4) == Parity::even);
  CHECK(st.at(-3) == Parity::odd);
  CHECK(st.at(0) == Parity::even);
  CHECK(pl.at(-1) == Parity::even);
  CHECK(pl.at(0) == Parity::odd);
  CHECK(pl.at(7) == Parity::odd);
}

TEST_CASE("presentations canonicalize to a unique form") {
  // p_st given with a redundant window collapses to the pure periodic form.
  ParityFunction redundant(0, {Parity::even, Parity::odd, Parity::even, Parity::odd},
                           TailRule::periodic("01"), TailRule::periodic("01"));
  CHECK(redundant == ParityFunction::p_st());
  // periodic word with a non-minimal period
  ParityFunction fat(0, {}, TailRule::periodic("0101"), TailRule::periodic("0101"));
  CHECK(fat == ParityFunction::p_st());
  // window values folded into the tails from both sides
  ParityFunction off(2, {Parity::even, Parity::odd}, TailRule::periodic("01"),
                     TailRule::periodic("01"));
  CHECK(off == ParityFunction::p_st());
}

TEST_CASE("bracket matches the hand-expanded elementary cases") {
  ParityFunction ev = ParityFunction::constant(Parity::even);
  CHECK(bracket(unit(ev, 0, 1), unit(ev, 1, 2)) == unit(ev, 0, 2));

  ParityFunction st = ParityFunction::p_st();
  SuperMatrix c = bracket(unit(st, 0, 1), unit(st, 1, 0));
  SuperMatrix expect = unit(st, 0, 0) + unit(st, 1, 1);
  CHECK(c == expect);

  // even homogeneous elements bracket to zero with themselves
  gen::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    SuperMatrix a = gen::homogeneous(rng, st, Parity::even);
    CHECK(bracket(a, a).zero());
  }
}

TEST_CASE("bracket requires a shared parity presentation") {
  SuperMatrix a = unit(ParityFunction::p_st(), 0, 1);
  SuperMatrix b = unit(ParityFunction::p_plus(), 1, 0);
  CHECK_THROWS_AS((void)bracket(a, b), std::invalid_argument);
}

TEST_CASE("supertrace on elementary matrices and brackets") {
  ParityFunction st = ParityFunction::p_st();
  CHECK(supertrace(unit(st, 0, 0)) == 1);
  CHECK(supertrace(unit(st, 1, 1)) == -1);
  CHECK(supertrace(bracket(unit(st, 0, 1), unit(st, 1, 0))) == 0);
}

TEST_CASE("supertrace kills every bracket of finite matrices") {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    ParityFunction p = gen::parity(rng);
    SuperMatrix a = gen::matrix(rng, p), b = gen::matrix(rng, p);
    CHECK(supertrace(bracket(a, b)) == 0);
  }
}

TEST_CASE("homogeneous_part splits by position parity") {
  ParityFunction st = ParityFunction::p_st();
  CHECK(homogeneous_part(unit(st, 0, 1), Parity::odd) == unit(st, 0, 1));
  CHECK(homogeneous_part(unit(st, 0, 1), Parity::even).zero());
  ParityFunction ev = ParityFunction::constant(Parity::even);
  gen::Rng rng(3);
  SuperMatrix any = gen::matrix(rng, ev);
  CHECK(homogeneous_part(any, Parity::odd).zero());
}

TEST_CASE("bracket agrees with the dense reference on random inputs") {
  gen::Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    ParityFunction p = gen::parity(rng);
    SuperMatrix a = gen::matrix(rng, p), b = gen::matrix(rng, p);
    oracle::Dense da = oracle::densify(a, -17, 17);
    oracle::Dense db = oracle::densify(b, -17, 17);
    oracle::Dense dc = oracle::dense_bracket(p, da, db);
    CHECK(oracle::matches(dc, bracket(a, b)));
  }
}

TEST_CASE("super antisymmetry and Jacobi hold exactly") {
  gen::Rng rng(31);
  std::vector<ParityFunction> ps = {ParityFunction::p_st(), ParityFunction::p_plus(),
                                    gen::parity(rng), gen::parity(rng)};
  for (const ParityFunction& p : ps) {
    for (int t = 0; t < 60; ++t) {
      Parity pa = Parity(int(gen::pick(rng, 0, 1))), pb = Parity(int(gen::pick(rng, 0, 1)));
      SuperMatrix a = gen::homogeneous(rng, p, pa), b = gen::homogeneous(rng, p, pb);
      int s = parity_sign(pa) == -1 && parity_sign(pb) == -1 ? -1 : 1;
      SuperMatrix rhs = Rational(-s) * bracket(b, a);
      CHECK(bracket(a, b) == rhs);

      Parity pc = Parity(int(gen::pick(rng, 0, 1)));
      SuperMatrix c = gen::homogeneous(rng, p, pc);
      auto sg = [](Parity x, Parity y) {
        return Rational(x == Parity::odd && y == Parity::odd ? -1 : 1);
      };
      SuperMatrix jac = sg(pa, pc) * bracket(a, bracket(b, c)) +
                        sg(pb, pa) * bracket(b, bracket(c, a)) +
                        sg(pc, pb) * bracket(c, bracket(a, b));
      CHECK(jac.zero());
    }
  }
}

TEST_CASE("bracket support stays inside the composition closure") {
  gen::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    ParityFunction p = gen::parity(rng);
    SuperMatrix a = gen::matrix(rng, p), b = gen::matrix(rng, p);
    std::set<std::pair<Index, Index>> sup;
    for (const auto& [pos, v] : a.entries()) sup.insert(pos);
    for (const auto& [pos, v] : b.entries()) sup.insert(pos);
    SuperMatrix c = bracket(a, b);
    for (const auto& [pos, v] : c.entries()) {
      bool reachable = false;
      for (const auto& e : sup)
        if (e.first == pos.first && sup.count({e.second, pos.second})) reachable = true;
      CHECK(reachable);
    }
  }
}

TEST_CASE("band radii add under the bracket") {
  gen::Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    ParityFunction p = gen::parity(rng);
    SuperMatrix a(p), b(p);
    Index c1 = gen::pick(rng, 0, 3), c2 = gen::pick(rng, 0, 3);
    for (int e = 0; e < 5; ++e) {
      Index i = gen::pick(rng, -8, 8);
      a.add(i, i + gen::pick(rng, -c1, c1), gen::scalar(rng));
      Index j = gen::pick(rng, -8, 8);
      b.add(j, j + gen::pick(rng, -c2, c2), gen::scalar(rng));
    }
    CHECK(bracket(a, b).band_radius() <= c1 + c2);
  }
}

TEST_CASE("growth class decisions over the descriptor grammar") {
  SupportProfile band3 = SupportProfile::band(3);
  auto d = class_membership(band3, GrowthClass::c);
  CHECK(d.member);
  CHECK(*d.witness == 3);
  for (GrowthClass g : {GrowthClass::g, GrowthClass::l, GrowthClass::o})
    CHECK(class_membership(band3, g).member);

  SupportProfile root = SupportProfile::power_band(1, make_rational(1, 2));
  CHECK_FALSE(class_membership(root, GrowthClass::o).member);
  CHECK(*class_membership(root, GrowthClass::o).witness == 2);  // failing exponent 1/e
  CHECK_FALSE(class_membership(root, GrowthClass::c).member);
  auto l = class_membership(root, GrowthClass::l);
  CHECK(l.member);
  CHECK(*l.witness < 2);
  CHECK(class_membership(root, GrowthClass::g).member);

  SupportProfile fin = SupportProfile::finite({{0, 5}});
  CHECK(class_membership(fin, GrowthClass::g).member);
  CHECK(*class_membership(fin, GrowthClass::c).witness == 5);

  SupportProfile too_steep = SupportProfile::power_band(1, make_rational(3, 2));
  CHECK_THROWS_AS((void)class_membership(too_steep, GrowthClass::g), std::domain_error);
}

TEST_CASE("window counts against a direct scan") {
  ParityFunction st = ParityFunction::p_st();
  ParityFunction pl = ParityFunction::p_plus();
  CHECK(st.odd_count(0, 3) == 2);
  CHECK(pl.odd_count(-4, -1) == 0);
  // direct enumeration as the reference
  Index scanned = 0;
  for (Index i = -5; i <= 5; ++i)
    if (st.at(i) == Parity::odd) ++scanned;
  CHECK(st.odd_count(-5, 5) == scanned);
  CHECK(scanned == 6);

  gen::Rng rng(53);
  for (int t = 0; t < 100; ++t) {
    ParityFunction p = gen::parity(rng);
    Index a = gen::pick(rng, -40, 30), b = a + gen::pick(rng, 0, 60);
    Index direct = 0;
    for (Index i = a; i <= b; ++i)
      if (p.at(i) == Parity::odd) ++direct;
    CHECK(p.odd_count(a, b) == direct);
  }
}

TEST_CASE("constant runs and tightness") {
  CHECK(is_tight(ParityFunction::p_st(), 1));
  CHECK_FALSE(is_tight(ParityFunction::p_plus(), 1000));
  ParityFunction blocky = ParityFunction::periodic("0011");
  CHECK_FALSE(is_tight(blocky, 1));
  CHECK(is_tight(blocky, 2));
}
