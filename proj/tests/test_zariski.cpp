#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmoduli/fixtures.hpp"
#include "kmoduli/models.hpp"
#include "kmoduli/oracles.hpp"

using namespace kmoduli;

namespace {

DivisorClass cls(std::vector<long> v) {
  DivisorClass out;
  for (long x : v) out.coords.push_back(Scalar(x));
  return out;
}

// P + N must reassemble the ray and stay orthogonal to its own support
void check_piece_identities(const SurfaceModel& m, const RayDecomposition& dec,
                            const DivisorClass& start, const DivisorClass& direction) {
  for (const auto& piece : dec.pieces) {
    Scalar mid = (piece.lo + piece.hi) / Scalar(2);
    DivisorClass p = piece.positive.at(mid);
    DivisorClass expected = start - direction.scaled(mid);
    DivisorClass n(std::vector<Scalar>(m.rank(), Scalar(0)));
    for (const auto& [name, coeff] : piece.negative) {
      const NamedCurve* curve = m.find_curve(name);
      REQUIRE(curve != nullptr);
      Scalar val = coeff.at(mid);
      CHECK(val.sign() >= 0);
      n = n + curve->cls.scaled(val);
      CHECK(intersect(m, p, curve->cls).is_zero());
    }
    CHECK(p + n == expected);
    CHECK(is_nef_against(m, p).nef);
  }
}

}  // namespace

TEST_CASE("exceptional ray on the (1,4) blow-up at c = 1/4") {
  RayProblem pb = fixtures::p14_exceptional();
  Scalar c(Rational(1, 4));
  DivisorClass start = pb.polarization(c);
  auto dec = decompose_ray(pb.model, start, pb.direction);

  REQUIRE(dec.breakpoints.size() == 4);
  CHECK(dec.breakpoints[0] == Scalar(0));
  CHECK(dec.breakpoints[1] == Scalar(1));
  CHECK(dec.breakpoints[2] == Scalar(7));
  CHECK(dec.threshold() == Scalar(8));

  REQUIRE(dec.pieces.size() == 3);
  CHECK(dec.pieces[0].negative.empty());
  REQUIRE(dec.pieces[1].negative.size() == 1);
  CHECK(dec.pieces[1].negative[0].first == "ft1");
  // coefficient (t - 2 + 4c)/4 = (t - 1)/4
  CHECK(dec.pieces[1].negative[0].second.at(Scalar(5)) == Scalar(1));
  REQUIRE(dec.pieces[2].negative.size() == 2);

  check_piece_identities(pb.model, dec, start, pb.direction);
}

TEST_CASE("subtracting a nef ruling needs no negative part") {
  SurfaceModel m = p1xp1();
  auto dec = decompose_ray(m, cls({2, 2}), cls({0, 1}));
  CHECK(dec.pieces.size() == 1);
  CHECK(dec.threshold() == Scalar(2));
  CHECK(dec.pieces[0].negative.empty());
}

TEST_CASE("fiber ray on F2 crosses into the e-supported chamber") {
  RayProblem pb = fixtures::f2_fiber();
  Scalar c(Rational(1, 10));
  DivisorClass start = pb.polarization(c);
  auto dec = decompose_ray(pb.model, start, pb.direction);

  REQUIRE(dec.breakpoints.size() == 3);
  CHECK(dec.breakpoints[1] == Scalar(Rational(1, 5)));  // 2c
  CHECK(dec.threshold() == Scalar(3));                  // 4 - 10c

  REQUIRE(dec.pieces.size() == 2);
  REQUIRE(dec.pieces[1].negative.size() == 1);
  CHECK(dec.pieces[1].negative[0].first == "e");
  // P on the second piece is proportional to e + 2f
  DivisorClass p = dec.pieces[1].positive.at(Scalar(1));
  CHECK(p.coords[1] == Scalar(2) * p.coords[0]);

  check_piece_identities(pb.model, dec, start, pb.direction);
}

TEST_CASE("identities hold at random boundary coefficients") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(1, 45);
  for (const char* name : {"p14/E", "p14/D", "p14/f1", "f2d0/f1", "f2d0/einf", "p46/Q"}) {
    RayProblem pb = fixtures::by_name(name);
    for (int trial = 0; trial < 6; ++trial) {
      Rational cv(num(rng), 100);
      if (pb.volume(Scalar(cv)).sign() <= 0) continue;
      DivisorClass start = pb.polarization(Scalar(cv));
      auto dec = decompose_ray(pb.model, start, pb.direction);
      check_piece_identities(pb.model, dec, start, pb.direction);

      // volume is continuous across breakpoints and non-increasing
      Rational last_vol(-1);
      for (size_t i = 0; i + 1 < dec.pieces.size(); ++i) {
        DivisorClass left = dec.pieces[i].positive.at(dec.breakpoints[i + 1]);
        DivisorClass right = dec.pieces[i + 1].positive.at(dec.breakpoints[i + 1]);
        CHECK(intersect(pb.model, left, left) == intersect(pb.model, right, right));
      }
      for (const auto& piece : dec.pieces) {
        for (const Scalar& t : {piece.lo, (piece.lo + piece.hi) / Scalar(2), piece.hi}) {
          DivisorClass p = piece.positive.at(t);
          Rational vol = intersect(pb.model, p, p).as_rational();
          if (last_vol.sign() >= 0) CHECK(vol <= last_vol);
          last_vol = vol;
          // agrees with the fixed-class evaluation
          CHECK(vol == oracles::volume_at(pb.model, start - pb.direction.scaled(t)));
        }
      }
      CHECK(last_vol == Rational(0));
    }
  }
}

TEST_CASE("error paths") {
  SurfaceModel m = p1xp1();
  CHECK_THROWS_WITH_AS(decompose_ray(m, cls({-1, -1}), cls({0, 1})),
                       doctest::Contains("not pseudo-effective"), Error);
  CHECK_THROWS_WITH_AS(decompose_ray(m, cls({1, -1}), cls({0, 1})),
                       doctest::Contains("not pseudo-effective"), Error);
  // a ray that never leaves the cone cannot terminate
  CHECK_THROWS_WITH_AS(decompose_ray(m, cls({2, 2}), cls({-1, 0})),
                       doctest::Contains("registry insufficient"), Error);
  CHECK_THROWS_AS(decompose_ray(m, cls({2, 2}), cls({0, 0})), Error);
}
