#include "kmoduli/cbf.hpp"

#include "kmoduli/models.hpp"

namespace kmoduli {

Rational moduli_degree_from_map(long deg_f) {
  if (deg_f <= 0) throw Error("bad parameter", "map degree must be positive");
  if (deg_f % 6 != 0)
    throw Error("divisibility violation", "deg f must be divisible by 6 when the fibers over "
                                          "the stacky points are schematic");
  return Rational(deg_f, 12);
}

long n4_curve_map_degree(long n) {
  if (n < 1) throw Error("bad parameter", "n must be positive");
  return 6 * n;
}

HirzebruchBoundCheck hirzebruch_bound_check(long n, long deg_f) {
  if (n < 0) throw Error("bad parameter", "n must be nonnegative");
  moduli_degree_from_map(deg_f);  // divisibility gate
  if (n == 0) {
    return {true, Rational(0), Rational(0), "no negative section on F_0"};
  }
  SurfaceModel fn = hirzebruch(n);
  DivisorClass e = fn.from_named({{"e", Scalar(1)}});
  DivisorClass d = fn.from_named(
      {{"e", Scalar(4)}, {"f", Scalar(Rational(2 * n) + Rational(deg_f, 6))}});
  Rational de = intersect(fn, d, e).as_rational();
  Rational dme = intersect(fn, d - e, e).as_rational();
  bool contradiction = de.sign() < 0 && dme.sign() < 0;
  HirzebruchBoundCheck out;
  out.consistent = !contradiction;
  out.d_dot_e = de;
  out.d_minus_e_dot_e = dme;
  out.detail = contradiction ? "2e inside an effective D with a 4-section: impossible"
                             : "no forced double section";
  return out;
}

}  // namespace kmoduli
