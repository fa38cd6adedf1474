#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "superglinf/extension.hpp"

using namespace superglinf;

TEST_CASE("cocycle of the crossing pair under the standard parity") {
  ParityFunction st = ParityFunction::p_st();
  SuperMatrix a = SuperMatrix::unit(st, -1, 0);
  SuperMatrix b = SuperMatrix::unit(st, 0, -1);
  CHECK(cocycle(a, b) == -2);
  // ... while the supertrace pairing vanishes on the same bracket
  CHECK(supertrace(bracket(a, b)) == 0);
}

TEST_CASE("cocycle vanishes without diagonal mass") {
  ParityFunction st = ParityFunction::p_st();
  CHECK(cocycle(SuperMatrix::unit(st, 0, 1), SuperMatrix::unit(st, 2, 3)) == 0);
  gen::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    SuperMatrix a = gen::homogeneous(rng, st, Parity::even);
    CHECK(cocycle(a, a) == 0);
  }
}

TEST_CASE("cocycle is bilinear and super-antisymmetric") {
  gen::Rng rng(9);
  for (int t = 0; t < 80; ++t) {
    ParityFunction p = gen::parity(rng);
    Parity pa = Parity(int(gen::pick(rng, 0, 1))), pb = Parity(int(gen::pick(rng, 0, 1)));
    SuperMatrix a = gen::homogeneous(rng, p, pa), b = gen::homogeneous(rng, p, pb);
    SuperMatrix c = gen::homogeneous(rng, p, pa);
    Rational l = gen::scalar(rng);
    CHECK(cocycle(a + c, b) == cocycle(a, b) + cocycle(c, b));
    CHECK(cocycle(l * a, b) == l * cocycle(a, b));
    int sg = pa == Parity::odd && pb == Parity::odd ? -1 : 1;
    CHECK(cocycle(a, b) == Rational(-sg) * cocycle(b, a));
  }
}

TEST_CASE("cocycle agrees with the dense reference") {
  gen::Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    ParityFunction p = gen::parity(rng);
    SuperMatrix a = gen::matrix(rng, p), b = gen::matrix(rng, p);
    oracle::Dense da = oracle::densify(a, -17, 17);
    oracle::Dense db = oracle::densify(b, -17, 17);
    CHECK(cocycle(a, b) == oracle::dense_cocycle(p, da, db));
  }
}

TEST_CASE("band-supported arguments need no special path") {
  gen::Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    ParityFunction p = gen::parity(rng);
    SuperMatrix a(p), b(p);
    for (int e = 0; e < 5; ++e) {
      Index i = gen::pick(rng, -8, 8);
      a.add(i, i + gen::pick(rng, -2, 2), gen::scalar(rng));
      Index j = gen::pick(rng, -8, 8);
      b.add(j, j + gen::pick(rng, -2, 2), gen::scalar(rng));
    }
    oracle::Dense da = oracle::densify(a, -12, 12);
    oracle::Dense db = oracle::densify(b, -12, 12);
    CHECK(cocycle(a, b) == oracle::dense_cocycle(p, da, db));
  }
}

TEST_CASE("extended bracket drops the central coordinates of its arguments") {
  ParityFunction st = ParityFunction::p_st();
  ExtendedElement x(SuperMatrix::unit(st, -1, 0), 0);
  ExtendedElement y(SuperMatrix::unit(st, 0, -1), 0);
  ExtendedElement out = extended_bracket(x, y);
  CHECK(out.mat == SuperMatrix::unit(st, -1, -1) + SuperMatrix::unit(st, 0, 0));
  CHECK(out.z == -2);

  // central elements bracket to zero
  ExtendedElement central(SuperMatrix(st), 1);
  gen::Rng rng(19);
  ExtendedElement any(gen::matrix(rng, st), gen::scalar(rng));
  ExtendedElement zz = extended_bracket(central, any);
  CHECK(zz.mat.zero());
  CHECK(zz.z == 0);

  // commuting diagonals
  ExtendedElement d0(SuperMatrix::unit(st, 0, 0), 0), d1(SuperMatrix::unit(st, 1, 1), 0);
  ExtendedElement w = extended_bracket(d0, d1);
  CHECK(w.mat.zero());
  CHECK(w.z == 0);

  // the arguments' z never leaks into the result
  ExtendedElement xz(x.mat, 17), yz(y.mat, -4);
  CHECK(extended_bracket(xz, yz) == out);
}

TEST_CASE("extended super Jacobi identity holds exactly") {
  gen::Rng rng(29);
  for (int t = 0; t < 150; ++t) {
    ParityFunction p = gen::parity(rng);
    Parity pa = Parity(int(gen::pick(rng, 0, 1)));
    Parity pb = Parity(int(gen::pick(rng, 0, 1)));
    Parity pc = Parity(int(gen::pick(rng, 0, 1)));
    ExtendedElement a(gen::homogeneous(rng, p, pa), gen::scalar(rng));
    ExtendedElement b(gen::homogeneous(rng, p, pb), gen::scalar(rng));
    ExtendedElement c(gen::homogeneous(rng, p, pc), gen::scalar(rng));
    auto sg = [](Parity x, Parity y) {
      return Rational(x == Parity::odd && y == Parity::odd ? -1 : 1);
    };
    ExtendedElement t1 = extended_bracket(a, extended_bracket(b, c));
    ExtendedElement t2 = extended_bracket(b, extended_bracket(c, a));
    ExtendedElement t3 = extended_bracket(c, extended_bracket(a, b));
    SuperMatrix mat = sg(pa, pc) * t1.mat + sg(pb, pa) * t2.mat + sg(pc, pb) * t3.mat;
    Rational z = sg(pa, pc) * t1.z + sg(pb, pa) * t2.z + sg(pc, pb) * t3.z;
    CHECK(mat.zero());
    CHECK(z == 0);
  }
}
