#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmoduli/models.hpp"

using namespace kmoduli;

namespace {
DivisorClass cls(std::vector<long> v) {
  DivisorClass out;
  for (long x : v) out.coords.push_back(Scalar(x));
  return out;
}
}  // namespace

TEST_CASE("p1xp1 intersection numbers") {
  SurfaceModel m = p1xp1();
  CHECK(intersect(m, cls({1, 0}), cls({0, 1})) == Scalar(1));
  CHECK(intersect(m, cls({1, 0}), cls({1, 0})) == Scalar(0));
  CHECK(intersect(m, m.canonical, m.canonical) == Scalar(8));
  CHECK(intersect(m, cls({1, 4}), cls({1, 4})) == Scalar(8));
}

TEST_CASE("hirzebruch surface") {
  SurfaceModel m = hirzebruch(2);
  DivisorClass e = m.from_named({{"e", Scalar(1)}});
  DivisorClass f = m.from_named({{"f", Scalar(1)}});
  CHECK(intersect(m, e, e) == Scalar(-2));
  CHECK(intersect(m, e, f) == Scalar(1));
  DivisorClass minus_k = m.canonical.scaled(Scalar(-1));
  CHECK(minus_k == cls({2, 4}));
  CHECK(intersect(m, minus_k, minus_k) == Scalar(8));

  // -K - c D0 with D0 = 4(e + 2f) + 2e + f + f, at c = 1/10
  Scalar c(Rational(1, 10));
  DivisorClass d0 = cls({6, 10});
  DivisorClass l = minus_k - d0.scaled(c);
  CHECK(l.coords[0] == Scalar(2) - Scalar(6) * c);
  CHECK(l.coords[1] == Scalar(4) - Scalar(10) * c);

  CHECK_THROWS_AS(hirzebruch(0), Error);
}

TEST_CASE("weighted blow-up intersection data") {
  SurfaceModel m = weighted_blowup_p1xp1(1, 4);
  const NamedCurve* ft1 = m.find_curve("ft1");
  const NamedCurve* ft2 = m.find_curve("ft2");
  const NamedCurve* e = m.find_curve("E");
  REQUIRE(ft1 != nullptr);
  REQUIRE(ft2 != nullptr);
  REQUIRE(e != nullptr);
  CHECK(intersect(m, ft1->cls, ft1->cls) == Scalar(Rational(-4)));
  CHECK(intersect(m, ft2->cls, ft2->cls) == Scalar(Rational(-1, 4)));
  CHECK(intersect(m, e->cls, e->cls) == Scalar(Rational(-1, 4)));
  CHECK(intersect(m, ft2->cls, e->cls) == Scalar(Rational(1, 4)));
  CHECK(intersect(m, ft1->cls, ft2->cls) == Scalar(0));
  CHECK(m.exceptional_discrepancy == Rational(4));

  SurfaceModel ordinary = weighted_blowup_p1xp1(1, 1);
  CHECK(intersect(ordinary, ordinary.find_curve("ft1")->cls, ordinary.find_curve("ft1")->cls) ==
        Scalar(-1));

  CHECK_THROWS_AS(weighted_blowup_p1xp1(0, 4), Error);
}

TEST_CASE("weighted blow-up self-intersections for general weights") {
  for (long a = 1; a <= 4; ++a) {
    for (long b = 1; b <= 5; ++b) {
      SurfaceModel m = weighted_blowup_p1xp1(a, b);
      CHECK(intersect(m, m.find_curve("ft1")->cls, m.find_curve("ft1")->cls) ==
            Scalar(Rational(-b, a)));
      CHECK(intersect(m, m.find_curve("ft2")->cls, m.find_curve("ft2")->cls) ==
            Scalar(Rational(-a, b)));
      // pull-backs intersect as downstairs
      CHECK(intersect(m, cls({1, 0, 0}), cls({0, 1, 0})) == Scalar(1));
      CHECK(intersect(m, cls({1, 0, 0}), cls({1, 0, 0})) == Scalar(0));
      CHECK(intersect(m, cls({1, 0, 0}), m.find_curve("E")->cls) == Scalar(0));
    }
  }
}

TEST_CASE("nef tests against the registry") {
  SurfaceModel q = p1xp1();
  CHECK(is_nef_against(q, cls({2, 1})).nef);  // (2-c)f1 + (2-4c)f2 at c = 1/4 scaled
  CHECK(is_nef_against(q, cls({0, 0})).nef);

  SurfaceModel m = weighted_blowup_p1xp1(1, 4);
  DivisorClass bad = cls({1, 0, -5});  // pull-back f1 minus 5E
  NefReport r = is_nef_against(m, bad);
  CHECK_FALSE(r.nef);
  CHECK(r.witness == "ft1");

  NefReport neg_square = is_nef_against(p1xp1(), cls({1, -1}));
  CHECK_FALSE(neg_square.nef);
  CHECK(neg_square.witness == "self-intersection");
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coeff(-6, 6);
  SurfaceModel m = weighted_blowup_p1xp1(2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    DivisorClass a = cls({coeff(rng), coeff(rng), coeff(rng)});
    DivisorClass b = cls({coeff(rng), coeff(rng), coeff(rng)});
    DivisorClass c = cls({coeff(rng), coeff(rng), coeff(rng)});
    CHECK(intersect(m, a, b) == intersect(m, b, a));
    CHECK(intersect(m, a + b, c) == intersect(m, a, c) + intersect(m, b, c));
    Scalar k(Rational(coeff(rng), 5));
    CHECK(intersect(m, a.scaled(k), b) == k * intersect(m, a, b));
  }
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(intersect(p1xp1(), cls({1, 2, 3}), cls({1, 0})), Error);
}
