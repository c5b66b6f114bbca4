#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmoduli/oracles.hpp"
#include "kmoduli/scalar.hpp"

using namespace kmoduli;

TEST_CASE("quadratic roots: wall equation") {
  auto roots = quad_roots(Rational(15), Rational(-9), Rational(1));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].field_d() == 21);
  CHECK(roots[0].rat_part() == Rational(3, 10));
  CHECK(roots[0].surd_part() == Rational(-1, 30));
  CHECK(roots[1].surd_part() == Rational(1, 30));
  CHECK(roots[0] < roots[1]);
  CHECK(roots[0].pretty() == "(9-sqrt(21))/30");
}

TEST_CASE("quadratic roots: rational cases") {
  auto dbl = quad_roots(Rational(1), Rational(0), Rational(0));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0] == Scalar(0));

  auto fact = quad_roots(Rational(1), Rational(-3), Rational(2));
  REQUIRE(fact.size() == 2);
  CHECK(fact[0] == Scalar(1));
  CHECK(fact[1] == Scalar(2));

  CHECK(quad_roots(Rational(1), Rational(0), Rational(1)).empty());
  CHECK(quad_roots(Rational(0), Rational(2), Rational(-3)).size() == 1);
  CHECK(quad_roots(Rational(0), Rational(0), Rational(5)).empty());
  CHECK_THROWS_WITH_AS(quad_roots(Rational(0), Rational(0), Rational(0)),
                       "degenerate polynomial", Error);
}

TEST_CASE("comparison is exact") {
  Scalar c0 = quad_roots(Rational(15), Rational(-9), Rational(1))[0];
  CHECK(compare(c0, Scalar(Rational(147, 1000))) == Ordering::Greater);
  CHECK(compare(Scalar(Rational(1, 2)), Scalar(Rational(1, 2))) == Ordering::Equal);
  Scalar sqrt21(Rational(0), Rational(1), 21);
  CHECK(compare(sqrt21, Scalar(5)) == Ordering::Less);
  CHECK(compare(sqrt21, Scalar(4)) == Ordering::Greater);

  Scalar sqrt2(Rational(0), Rational(1), 2);
  CHECK_THROWS_AS((void)(sqrt2 + sqrt21), Error);
}

TEST_CASE("square parts of d are folded") {
  Scalar x(Rational(1), Rational(1), 8);  // 1 + sqrt(8) = 1 + 2 sqrt(2)
  CHECK(x.field_d() == 2);
  CHECK(x.surd_part() == Rational(2));
  Scalar y(Rational(3), Rational(5), 9);  // 3 + 5*3
  CHECK(y.is_rational());
  CHECK(y.as_rational() == Rational(18));
}

TEST_CASE("roots substitute back to zero") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coeff(-20, 20);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Rational p2(coeff(rng)), p1(coeff(rng)), p0(coeff(rng));
    if (p2.is_zero() && p1.is_zero() && p0.is_zero()) continue;
    for (const Scalar& r : quad_roots(p2, p1, p0)) {
      Scalar v = Scalar(p2) * r * r + Scalar(p1) * r + Scalar(p0);
      REQUIRE(v.is_zero());
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> small(-9, 9);
  for (long d : {2L, 3L, 5L, 21L}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto rnd = [&] {
        return Scalar(Rational(small(rng), 1 + std::abs(small(rng))),
                      Rational(small(rng), 1 + std::abs(small(rng))), d);
      };
      Scalar x = rnd(), y = rnd(), z = rnd();
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == Scalar(0));
      if (!x.is_zero()) CHECK(x / x == Scalar(1));
    }
  }
}

TEST_CASE("sign agrees with the interval oracle") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> small(-30, 30);
  for (int trial = 0; trial < 400; ++trial) {
    long d = std::vector<long>{2, 3, 5, 6, 21}[static_cast<size_t>(trial % 5)];
    Scalar x(Rational(small(rng), 1 + std::abs(small(rng))),
             Rational(small(rng), 1 + std::abs(small(rng))), d);
    CHECK(x.sign() == oracles::interval_sign(x, 50));
  }
  // near-cancellation: 152/105 is within 1e-4 of sqrt(21)/(10/... pick a tight pair
  Scalar tight(Rational(-46099201, 10059000), Rational(1), 21);  // ~ -4.58... + sqrt(21)
  CHECK(tight.sign() == oracles::interval_sign(tight, 50));
}

TEST_CASE("in-field square roots") {
  // (3/5 - sqrt(21)/15)^2 = 34/75 - (2/25) sqrt(21)
  Scalar target(Rational(34, 75), Rational(-2, 25), 21);
  auto root = target.sqrt();
  REQUIRE(root.has_value());
  CHECK(*root * *root == target);
  CHECK(root->sign() > 0);

  CHECK(Scalar(Rational(9, 4)).sqrt().value() == Scalar(Rational(3, 2)));
  Scalar s32 = Scalar(32).sqrt().value();
  CHECK(s32.field_d() == 2);
  CHECK(s32 * s32 == Scalar(32));
  CHECK_FALSE(Scalar(-1).sqrt().has_value());
  // 1 + sqrt(2) is not a square in Q(sqrt 2)
  CHECK_FALSE(Scalar(Rational(1), Rational(1), 2).sqrt().has_value());
}

TEST_CASE("string encodings") {
  Scalar c0 = quad_roots(Rational(15), Rational(-9), Rational(1))[0];
  CHECK(c0.str() == "3/10 + -1/30*sqrt(21)");
  CHECK(Scalar::parse(c0.str()) == c0);
  CHECK(Scalar::parse("5") == Scalar(5));
  CHECK(Scalar::parse("-7/3") == Scalar(Rational(-7, 3)));
  CHECK(Scalar::parse("1/2 + 1/3*sqrt(5)") == Scalar(Rational(1, 2), Rational(1, 3), 5));
  CHECK(c0.decimal12() == "0.147247476834");

  CHECK(Scalar(Rational(-1, 8)).decimal12() == "-0.125000000000");
  CHECK(Scalar(2).decimal12() == "2.000000000000");
}
