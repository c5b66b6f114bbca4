#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmoduli/lct.hpp"

using namespace kmoduli;

namespace {
LocalPair germ(std::initializer_list<std::tuple<long, long, long>> terms,
               FiberAxis fiber = FiberAxis::Y) {
  LocalPair p;
  p.fiber = fiber;
  p.a = Rational(1, 2);
  for (const auto& [a, b, c] : terms) p.set(a, b, Rational(c));
  return p;
}
}  // namespace

TEST_CASE("cusp against the fiber") {
  auto r = lct_along_fiber(germ({{3, 0, -1}, {0, 2, 1}}));  // y^2 - x^3
  CHECK(r.lct == Rational(2, 3));
  CHECK(r.b == Rational(1, 3));
  CHECK(r.witness_weight == std::pair<long, long>{2, 3});
}

TEST_CASE("transverse smooth branch clamps at one") {
  auto r = lct_along_fiber(germ({{1, 0, -1}, {0, 1, 1}}));  // y - x
  CHECK(r.lct == Rational(1));
  CHECK(r.b == Rational(0));
}

TEST_CASE("deep cusp") {
  auto r = lct_along_fiber(germ({{3, 0, 1}, {0, 5, -1}}));  // x^3 - y^5
  CHECK(r.lct == Rational(1, 6));
  CHECK(r.b == Rational(5, 6));
}

TEST_CASE("fiber-divisible germs split onto the fiber") {
  // x^2 y: split leaves x^2 with half a fiber already in the boundary
  auto r = lct_along_fiber(germ({{2, 1, 1}}));
  CHECK(r.lct == Rational(1, 2));
  // xy: the two transverse branches allow 1/2 more of the fiber
  auto r2 = lct_along_fiber(germ({{1, 1, 1}}));
  CHECK(r2.lct == Rational(1, 2));
  CHECK(lct_bruteforce_oracle(germ({{1, 1, 1}}), 50) == Rational(1, 2));
  // a pure fiber power is rejected
  CHECK_THROWS_WITH_AS(lct_along_fiber(germ({{0, 2, 1}})), doctest::Contains("fiber divides"),
                       Error);
}

TEST_CASE("table regression") {
  TableReport report = table_regression(50);
  CHECK(report.all_pass);
  CHECK(report.rows.size() == 20);
  for (const auto& row : report.rows) {
    CAPTURE(row.label);
    CHECK(row.match);
    CHECK(row.oracle_match);
    CHECK(row.nondegenerate);
    CHECK(row.got_lct > Rational(0));
    CHECK(row.got_lct <= Rational(1));
  }
}

TEST_CASE("oracle properties") {
  auto p = germ({{3, 0, -1}, {0, 2, 1}});
  Rational at50 = lct_bruteforce_oracle(p, 50);
  Rational at10 = lct_bruteforce_oracle(p, 10);
  CHECK(at50 <= at10);
  CHECK(at50 == lct_along_fiber(p).lct);
  CHECK_THROWS_AS(lct_bruteforce_oracle(p, 5), Error);
}

TEST_CASE("scaling invariance") {
  LocalPair p = germ({{3, 0, -1}, {0, 2, 1}});
  LocalPair scaled = p;
  for (auto& [ab, c] : scaled.support) c *= Rational(7, 3);
  CHECK(lct_along_fiber(p).lct == lct_along_fiber(scaled).lct);
}

TEST_CASE("axis swap invariance") {
  TableReport report = table_regression(50);
  for (const auto& row : report.rows) {
    LocalPair swapped;
    swapped.a = row.pair.a;
    swapped.fiber = row.pair.fiber == FiberAxis::Y ? FiberAxis::X : FiberAxis::Y;
    for (const auto& [ab, c] : row.pair.support) swapped.set(ab.second, ab.first, c);
    CHECK(lct_along_fiber(swapped).lct == row.got_lct);
  }
}

TEST_CASE("degenerate instantiations are reported") {
  // x (x - y)^2 has a repeated branch: the edge polynomial picks it up
  LocalPair bad = germ({{3, 0, 1}, {2, 1, -2}, {1, 2, 1}});
  CHECK_FALSE(degenerate_edges(bad).empty());
}

TEST_CASE("input validation") {
  LocalPair empty;
  CHECK_THROWS_AS(lct_along_fiber(empty), Error);
  LocalPair unit = germ({{0, 0, 1}});
  CHECK_THROWS_AS(lct_along_fiber(unit), Error);
  CHECK_THROWS_AS(germ({{-1, 0, 1}}), Error);
}
