#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmoduli/poly.hpp"
#include "kmoduli/zariski.hpp"

namespace kmoduli {

/// How the divisor being tested meets the boundary: a prime divisor on the
/// surface with a multiplicity inside the boundary, or the exceptional of a
/// weighted blow-up carrying the model's discrepancy constant together with
/// the order of the boundary along it.
struct DivisorSpec {
  enum class Kind { PrimeOnSurface, Exceptional } kind;
  Rational boundary_multiplicity;       // prime case: mult of the divisor in the boundary
  Rational discrepancy_constant;        // exceptional case: a+b-1 for weights (a,b)
  Rational boundary_order;              // exceptional case: ord_E of the boundary

  static DivisorSpec prime(Rational multiplicity) {
    return {Kind::PrimeOnSurface, std::move(multiplicity), Rational(0), Rational(0)};
  }
  static DivisorSpec exceptional(Rational k, Rational r) {
    return {Kind::Exceptional, Rational(0), std::move(k), std::move(r)};
  }
};

/// A_{X,cΔ}: 1 - c*m for a prime divisor of boundary multiplicity m,
/// 1 + k - c*r for an exceptional divisor with discrepancy constant k and
/// boundary order r.
Scalar log_discrepancy(const DivisorSpec& spec, const Scalar& c);

/// One beta computation, fully specified: the model, the log anticanonical
/// family -K - cΔ written as base + c*slope, the ray direction, and the
/// log-discrepancy data of the direction divisor.
struct RayProblem {
  std::string name;
  SurfaceModel model;
  DivisorClass family_base;   // -K (pulled back when on a blow-up)
  DivisorClass family_slope;  // -Δ
  DivisorClass direction;
  DivisorSpec spec = DivisorSpec::prime(Rational(0));

  DivisorClass polarization(const Scalar& c) const {
    return family_base + family_slope.scaled(c);
  }
  /// Volume (−K−cΔ)^2 as an exact function of c.
  Scalar volume(const Scalar& c) const;
};

/// Expected vanishing order S = (1/V) ∫_0^T P(t)^2 dt, exact, via the ray
/// decomposition of polarization(c) - t*direction.
Scalar s_invariant(const RayProblem& problem, const Scalar& c);

/// beta = A - S, exact in Q or Q(sqrt(d)).
Scalar beta(const RayProblem& problem, const Scalar& c);

/// Refined S along the flag point ⊂ f2 ⊂ P^1 x P^1 for the boundary
/// c*(f1 + 4 f2) through the point: evaluates
/// (1/(2(2-c)(2-4c))) ∫_0^{2-4c} dt ∫_0^{2-c} (2-c-u) du exactly.
Scalar flag_s_invariant(const Scalar& c);

struct Chamber {
  Rational lo, hi;
  std::vector<std::vector<std::string>> pattern;  // breakpoint signature
  Poly numerator;          // interpolated beta * volume, primitive normalized
  Poly reduced_numerator;  // after stripping rational roots, primitive normalized
  std::vector<Scalar> walls;
};

struct WallScanResult {
  std::vector<Chamber> chambers;
  std::vector<Scalar> walls;  // union over chambers, ascending
};

/// Scans c in (0, c_max) for zeros of beta with sign change. On each maximal
/// interval where the decomposition's breakpoint pattern is constant, the
/// polynomial beta(c)*V(c) is reconstructed by exact interpolation at
/// degree_bound+1 rational points (verified against two extra samples),
/// rational roots are stripped, and the remaining quadratic is solved exactly.
/// c_max defaults to the bigness bound of the family, capped at 1.
WallScanResult wall_scan(const RayProblem& problem, int degree_bound = 4,
                         std::optional<Rational> c_hi = std::nullopt);

}  // namespace kmoduli
