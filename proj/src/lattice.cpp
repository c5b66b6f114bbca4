#include "kmoduli/lattice.hpp"

#include <algorithm>

namespace kmoduli {

bool DivisorClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (rank() != o.rank()) throw Error("dimension mismatch");
  DivisorClass out(coords);
  for (size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  if (rank() != o.rank()) throw Error("dimension mismatch");
  DivisorClass out(coords);
  for (size_t i = 0; i < coords.size(); ++i) out.coords[i] -= o.coords[i];
  return out;
}

DivisorClass DivisorClass::scaled(const Scalar& k) const {
  DivisorClass out(coords);
  for (auto& c : out.coords) c *= k;
  return out;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) return false;
  for (size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] != b.coords[i]) return false;
  return true;
}

DivisorClass SurfaceModel::from_named(
    const std::vector<std::pair<std::string, Scalar>>& terms) const {
  DivisorClass out(std::vector<Scalar>(rank(), Scalar(0)));
  for (const auto& [nm, coeff] : terms) {
    auto it = std::find(basis_names.begin(), basis_names.end(), nm);
    if (it == basis_names.end()) throw Error("unknown basis element", nm);
    out.coords[static_cast<size_t>(it - basis_names.begin())] += coeff;
  }
  return out;
}

const NamedCurve* SurfaceModel::find_curve(const std::string& curve_name) const {
  for (const auto& c : negative_curves)
    if (c.name == curve_name) return &c;
  return nullptr;
}

Scalar intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != model.rank() || b.rank() != model.rank()) throw Error("dimension mismatch");
  Scalar acc(0);
  for (size_t i = 0; i < model.rank(); ++i) {
    if (a.coords[i].is_zero()) continue;
    for (size_t j = 0; j < model.rank(); ++j) {
      if (model.gram[i][j].is_zero() || b.coords[j].is_zero()) continue;
      acc += a.coords[i] * Scalar(model.gram[i][j]) * b.coords[j];
    }
  }
  return acc;
}

NefReport is_nef_against(const SurfaceModel& model, const DivisorClass& cls) {
  for (const auto& curve : model.negative_curves) {
    if (intersect(model, cls, curve.cls).sign() < 0) return {false, curve.name};
  }
  if (intersect(model, cls, cls).sign() < 0) return {false, "self-intersection"};
  return {true, ""};
}

}  // namespace kmoduli
