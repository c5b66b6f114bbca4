#pragma once

#include <string>
#include <vector>

#include "kmoduli/lattice.hpp"

namespace kmoduli {

/// Affine function of the ray parameter t, with exact Scalar coefficients.
struct LinT {
  Scalar c0, c1;  // value c0 + c1 * t

  LinT() : c0(0), c1(0) {}
  LinT(Scalar constant, Scalar slope) : c0(std::move(constant)), c1(std::move(slope)) {}

  Scalar at(const Scalar& t) const { return c0 + c1 * t; }
  LinT operator+(const LinT& o) const { return {c0 + o.c0, c1 + o.c1}; }
  LinT operator-(const LinT& o) const { return {c0 - o.c0, c1 - o.c1}; }
  LinT scaled(const Scalar& k) const { return {c0 * k, c1 * k}; }
  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
};

/// Divisor class whose coordinates depend affinely on t.
struct ClassPath {
  std::vector<LinT> coords;

  DivisorClass at(const Scalar& t) const;
  static ClassPath affine(const DivisorClass& base, const DivisorClass& slope);
};

/// One interval of a ray decomposition: P(t) and the negative-part curve
/// coefficients, all affine in t on [lo, hi].
struct RayPiece {
  Scalar lo, hi;
  ClassPath positive;
  std::vector<std::pair<std::string, LinT>> negative;  // curve name -> coefficient
};

/// Piecewise Zariski decomposition of start - t*direction on [0, T]:
/// breakpoints (starting at 0, ending at T) and per-interval data. On each
/// interval P(t).C = 0 for every supporting curve C, the support Gram matrix
/// is negative definite, N-coefficients are nonnegative and P(T)^2 = 0.
struct RayDecomposition {
  std::vector<Scalar> breakpoints;
  std::vector<RayPiece> pieces;

  const Scalar& threshold() const { return breakpoints.back(); }

  /// Exact integral of P(t)^2 over [0, T] (each piece is a quadratic in t).
  Scalar positive_part_square_integral(const SurfaceModel& model) const;

  /// Ordered support pattern, one sorted name list per piece; used as the
  /// chamber signature by the wall scan.
  std::vector<std::vector<std::string>> signature() const;
};

/// Runs the classical iterative decomposition along start - t*direction,
/// treating t as an exact symbolic parameter. Correct relative to the
/// model's registered negative curves (the caller guarantees the registry
/// contains every curve that can enter N). Throws "not pseudo-effective"
/// when the start class is already outside, "registry insufficient" when no
/// nef positive part is reachable with the registered curves.
RayDecomposition decompose_ray(const SurfaceModel& model, const DivisorClass& start,
                               const DivisorClass& direction);

}  // namespace kmoduli
