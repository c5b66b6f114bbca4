#pragma once

#include "kmoduli/fujita.hpp"

namespace kmoduli {
namespace oracles {

/// Volume of a fixed divisor class relative to the registered curve list:
/// iteratively subtracts violating curves and returns P^2, or 0 once the
/// class leaves the cone. Independent of the symbolic ray machinery.
Rational volume_at(const SurfaceModel& model, const DivisorClass& cls);

/// Midpoint Riemann sum of vol(-K - cD - tE) over [0, T], `panels` panels
/// per decomposition piece, every sample evaluated exactly through
/// volume_at. Only the breakpoints are taken from the exact path; the
/// integrand is not.
Rational riemann_s_integral(const RayProblem& problem, const Rational& c, long panels);

/// Panel count for the Riemann oracle: KMODULI_ORACLE_PANELS or 10000.
long oracle_panels();

/// Sign of a + b*sqrt(d) by interval arithmetic with `digits` decimal
/// digits, refining until the interval excludes zero (exact zero detected
/// algebraically first). Used to cross-check Scalar::sign.
int interval_sign(const Scalar& x, int digits = 50);

}  // namespace oracles
}  // namespace kmoduli
