#pragma once

#include <json.hpp>

#include "friedrichs/boundary_model.hpp"
#include "friedrichs/functions.hpp"

namespace friedrichs {

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Signature& s);
nlohmann::json to_json(const BoundaryModel& model);
nlohmann::json to_json(const BCSubspace& v);
nlohmann::json to_json(const MOperatorMat& m);
nlohmann::json to_json(const ContractionU& u);
nlohmann::json to_json(const GridFunction& g);

}  // namespace friedrichs
