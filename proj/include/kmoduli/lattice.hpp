#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmoduli/scalar.hpp"

namespace kmoduli {

/// Divisor class written in the basis of some SurfaceModel.
struct DivisorClass {
  std::vector<Scalar> coords;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Scalar> c) : coords(std::move(c)) {}

  size_t rank() const { return coords.size(); }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass scaled(const Scalar& k) const;
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
};

struct NamedCurve {
  std::string name;
  DivisorClass cls;
  Rational self_intersection;
};

/// Neron-Severi data of one birational model: a named basis, the rational
/// Gram matrix of the intersection pairing, the canonical class, and the
/// registry of known irreducible negative curves. Everything downstream
/// (Zariski decomposition, nef tests) is relative to this registry; the
/// models in scope have Picard rank <= 3 and an explicitly known list.
struct SurfaceModel {
  std::string name;
  std::vector<std::string> basis_names;
  std::vector<std::vector<Rational>> gram;
  DivisorClass canonical;
  std::vector<NamedCurve> negative_curves;
  /// Discrepancy constant of the exceptional basis element, when the model
  /// is a weighted blow-up: A_X(E) = 1 + k before boundary corrections.
  std::optional<Rational> exceptional_discrepancy;

  size_t rank() const { return basis_names.size(); }
  DivisorClass from_named(const std::vector<std::pair<std::string, Scalar>>& terms) const;
  const NamedCurve* find_curve(const std::string& curve_name) const;
};

/// Exact intersection number a^T * gram * b.
Scalar intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b);

struct NefReport {
  bool nef;
  std::string witness;  // violating curve name, or "self-intersection"
};

/// True iff the class meets every registered curve nonnegatively and has
/// nonnegative self-intersection; on failure names a witness. Model-relative:
/// curves outside the registry are invisible to this test.
NefReport is_nef_against(const SurfaceModel& model, const DivisorClass& cls);

}  // namespace kmoduli
