#include "kmoduli/fixtures.hpp"

#include "kmoduli/models.hpp"

namespace kmoduli {
namespace fixtures {

namespace {

DivisorClass c2(long x, long y) { return DivisorClass({Scalar(x), Scalar(y)}); }
DivisorClass c3(long x, long y, long z) {
  return DivisorClass({Scalar(x), Scalar(y), Scalar(z)});
}

RayProblem p14_base(const std::string& name) {
  RayProblem pb;
  pb.name = name;
  pb.model = p1xp1();
  pb.family_base = c2(2, 2);     // -K
  pb.family_slope = c2(-1, -4);  // -C0
  return pb;
}

}  // namespace

RayProblem p14_exceptional() {
  RayProblem pb;
  pb.name = "p14/E";
  pb.model = weighted_blowup_p1xp1(1, 4);
  pb.family_base = c3(2, 2, 0);     // pull-back of -K
  pb.family_slope = c3(-1, -4, 0);  // pull-back of -C0
  pb.direction = c3(0, 0, 1);
  pb.spec = DivisorSpec::exceptional(Rational(4), Rational(4));
  return pb;
}

RayProblem p14_ruling_f1() {
  RayProblem pb = p14_base("p14/f1");
  pb.direction = c2(1, 0);
  pb.spec = DivisorSpec::prime(Rational(0));
  return pb;
}

RayProblem p14_ruling_f2() {
  RayProblem pb = p14_base("p14/f2");
  pb.direction = c2(0, 1);
  pb.spec = DivisorSpec::prime(Rational(0));
  return pb;
}

RayProblem p14_boundary() {
  RayProblem pb = p14_base("p14/D");
  pb.direction = c2(1, 4);
  pb.spec = DivisorSpec::prime(Rational(1));
  return pb;
}

RayProblem p46_conic() {
  RayProblem pb;
  pb.name = "p46/Q";
  pb.model = p1xp1();
  pb.family_base = c2(2, 2);
  pb.family_slope = c2(-4, -6);  // -(4Q + l1 + l2)
  pb.direction = c2(1, 1);       // Q
  pb.spec = DivisorSpec::prime(Rational(4));
  return pb;
}

RayProblem f2_fiber() {
  RayProblem pb;
  pb.name = "f2d0/f1";
  pb.model = hirzebruch(2);
  pb.family_base = c2(2, 4);      // -K on F_2
  pb.family_slope = c2(-6, -10);  // -D0, D0 = 4(e+2f) + 2e + 2f
  pb.direction = c2(0, 1);
  pb.spec = DivisorSpec::prime(Rational(1));
  return pb;
}

RayProblem f2_infinity_section() {
  RayProblem pb = f2_fiber();
  pb.name = "f2d0/einf";
  pb.direction = c2(1, 2);
  pb.spec = DivisorSpec::prime(Rational(4));
  return pb;
}

RayProblem by_name(const std::string& id) {
  if (id == "p14/E") return p14_exceptional();
  if (id == "p14/f1") return p14_ruling_f1();
  if (id == "p14/f2") return p14_ruling_f2();
  if (id == "p14/D") return p14_boundary();
  if (id == "p46/Q") return p46_conic();
  if (id == "f2d0/f1") return f2_fiber();
  if (id == "f2d0/einf") return f2_infinity_section();
  throw Error("unknown fixture", id);
}

std::vector<std::string> names() {
  return {"p14/E", "p14/f1", "p14/f2", "p14/D", "p46/Q", "f2d0/f1", "f2d0/einf"};
}

}  // namespace fixtures
}  // namespace kmoduli
