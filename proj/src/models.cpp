#include "kmoduli/models.hpp"

namespace kmoduli {

namespace {
DivisorClass cls2(long x, long y) { return DivisorClass({Scalar(x), Scalar(y)}); }
}  // namespace

SurfaceModel p1xp1() {
  SurfaceModel m;
  m.name = "p1xp1";
  m.basis_names = {"f1", "f2"};
  m.gram = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  m.canonical = cls2(-2, -2);
  return m;
}

SurfaceModel hirzebruch(long mm) {
  if (mm <= 0) throw Error("bad parameter", "hirzebruch needs m >= 1");
  SurfaceModel m;
  m.name = "hirzebruch(" + std::to_string(mm) + ")";
  m.basis_names = {"e", "f"};
  m.gram = {{Rational(-mm), Rational(1)}, {Rational(1), Rational(0)}};
  m.canonical = cls2(-2, -(mm + 2));
  m.negative_curves.push_back({"e", cls2(1, 0), Rational(-mm)});
  return m;
}

SurfaceModel weighted_blowup_p1xp1(long a, long b) {
  if (a <= 0 || b <= 0) throw Error("bad parameter", "weights must be positive");
  SurfaceModel m;
  m.name = "wblowup(" + std::to_string(a) + "," + std::to_string(b) + ")";
  m.basis_names = {"pf1", "pf2", "E"};
  Rational esq(-1, a * b);
  m.gram = {{Rational(0), Rational(1), Rational(0)},
            {Rational(1), Rational(0), Rational(0)},
            {Rational(0), Rational(0), esq}};
  m.canonical = DivisorClass({Scalar(-2), Scalar(-2), Scalar(Rational(a + b - 1))});
  m.exceptional_discrepancy = Rational(a + b - 1);
  // ft1 = pf1 - bE has square -b/a, ft2 = pf2 - aE has square -a/b
  m.negative_curves.push_back(
      {"ft1", DivisorClass({Scalar(1), Scalar(0), Scalar(Rational(-b))}), Rational(-b, a)});
  m.negative_curves.push_back(
      {"ft2", DivisorClass({Scalar(0), Scalar(1), Scalar(Rational(-a))}), Rational(-a, b)});
  m.negative_curves.push_back({"E", DivisorClass({Scalar(0), Scalar(0), Scalar(1)}), esq});
  return m;
}

}  // namespace kmoduli
