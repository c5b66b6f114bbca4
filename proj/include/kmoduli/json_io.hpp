#pragma once

#include <json.hpp>

#include "kmoduli/basecurve.hpp"
#include "kmoduli/fujita.hpp"
#include "kmoduli/git_stability.hpp"
#include "kmoduli/lct.hpp"

namespace kmoduli {

using nlohmann::json;

json scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json class_json(const DivisorClass& c);
DivisorClass class_from_json(const json& j);

json model_json(const SurfaceModel& m);
SurfaceModel model_from_json(const json& j);

json decomposition_json(const RayDecomposition& dec);

json biform_json(const BiForm& f);
BiForm biform_from_json(const json& j);

json git_result_json(const GitResult& r, const BiForm& f);

json localpair_json(const LocalPair& p);
LocalPair localpair_from_json(const json& j);

json threshold_json(const ThresholdResult& r);

json graph_json(const DecoratedDualGraph& g);
DecoratedDualGraph graph_from_json(const json& j);

json quasimap_types_json(const std::vector<QuasimapType>& types);

json wallscan_json(const WallScanResult& r);

}  // namespace kmoduli
