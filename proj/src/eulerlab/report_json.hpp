#pragma once

// JSON views of the report types. Field order is fixed by nlohmann's sorted
// object keys, so equal reports serialize to identical bytes.

#include <json.hpp>

#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/residuals.hpp"

namespace eulerlab {

nlohmann::json to_json_value(const SolutionParams& p);
nlohmann::json to_json_value(const SamplePoint& p);
nlohmann::json to_json_value(const EquationResult& e);
nlohmann::json to_json_value(const ResidualReport& r);

}  // namespace eulerlab
