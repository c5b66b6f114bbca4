#pragma once

#include "kmoduli/lattice.hpp"

namespace kmoduli {

/// P^1 x P^1 with basis (f1, f2), Gram [[0,1],[1,0]], K = -2f1 - 2f2.
SurfaceModel p1xp1();

/// Hirzebruch surface F_m, m >= 1: basis (e, f) with e^2 = -m, e.f = 1,
/// f^2 = 0, K = -2e - (m+2)f; the negative section e is registered.
SurfaceModel hirzebruch(long m);

/// (a,b)-weighted blow-up of P^1 x P^1 at a point on both rulings, encoded
/// purely by intersection data: basis (pf1, pf2, E) with E^2 = -1/(ab),
/// pull-backs orthogonal to E, strict transforms ft1 = pf1 - bE and
/// ft2 = pf2 - aE registered along with E. K = pull-back K + (a+b-1)E and
/// the discrepancy constant a+b-1 is stored for log-discrepancy bookkeeping.
SurfaceModel weighted_blowup_p1xp1(long a, long b);

}  // namespace kmoduli
