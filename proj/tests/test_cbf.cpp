#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmoduli/cbf.hpp"

using namespace kmoduli;

TEST_CASE("moduli degree from the cover degree") {
  CHECK(moduli_degree_from_map(12) == Rational(1));
  CHECK(moduli_degree_from_map(6) == Rational(1, 2));
  for (long n = 1; n <= 10; ++n)
    CHECK(moduli_degree_from_map(6 * n) == Rational(n, 2));
  CHECK_THROWS_WITH_AS(moduli_degree_from_map(8), doctest::Contains("divisible by 6"), Error);
  CHECK_THROWS_AS(moduli_degree_from_map(0), Error);
}

TEST_CASE("cover degree of (n,4)-curves") {
  CHECK(n4_curve_map_degree(1) == 6);
  CHECK(n4_curve_map_degree(4) == 24);
  for (long n = 1; n <= 10; ++n)
    CHECK(moduli_degree_from_map(n4_curve_map_degree(n)) == Rational(n, 2));
  CHECK_THROWS_AS(n4_curve_map_degree(0), Error);
}

TEST_CASE("additivity in the cover degree") {
  for (long a = 6; a <= 60; a += 6)
    for (long b = 6; b <= 60; b += 6)
      CHECK(moduli_degree_from_map(a + b) == moduli_degree_from_map(a) + moduli_degree_from_map(b));
}

TEST_CASE("hirzebruch effectivity bound") {
  auto ok = hirzebruch_bound_check(1, 6);
  CHECK(ok.consistent);
  CHECK(ok.d_dot_e == Rational(-1));
  CHECK(ok.d_minus_e_dot_e == Rational(0));

  auto bad = hirzebruch_bound_check(2, 6);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.d_dot_e == Rational(-3));
  CHECK(bad.d_minus_e_dot_e == Rational(-1));

  CHECK(hirzebruch_bound_check(0, 6).consistent);
  CHECK(hirzebruch_bound_check(0, 120).consistent);

  for (long n = 0; n <= 20; ++n)
    for (long degf = 6; degf <= 120; degf += 6)
      CHECK(hirzebruch_bound_check(n, degf).consistent == (6 * n <= degf));

  CHECK_THROWS_AS(hirzebruch_bound_check(2, 7), Error);
}
