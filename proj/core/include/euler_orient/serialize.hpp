#pragma once

#include <nlohmann/json.hpp>

#include "euler_orient/estimator.hpp"
#include "euler_orient/lemma_lab.hpp"
#include "euler_orient/montecarlo.hpp"

namespace eo {

// Stable JSON field names; BigCount values are decimal strings.
nlohmann::json to_json(const EstimateReport& report);
nlohmann::json to_json(const McResult& result);
nlohmann::json to_json(const LemmaReport& report);

}  // namespace eo
