#pragma once

#include <string>

#include "kmoduli/rational.hpp"

namespace kmoduli {

/// Moduli-part degree deg(f)/12 of the fibration classified by a degree
/// deg_f cover; deg_f must be divisible by 6.
Rational moduli_degree_from_map(long deg_f);

/// A smooth (n,4)-curve with log canonical half-fibers induces a cover of
/// degree 6n.
long n4_curve_map_degree(long n);

struct HirzebruchBoundCheck {
  bool consistent;
  Rational d_dot_e;         // D . e on F_n
  Rational d_minus_e_dot_e; // (D - e) . e
  std::string detail;
};

/// Replays the effectivity contradiction for D ~ 4e + (2n + deg_f/6)f on
/// F_n: both witness intersections negative exactly when 6n > deg_f.
HirzebruchBoundCheck hirzebruch_bound_check(long n, long deg_f);

}  // namespace kmoduli
