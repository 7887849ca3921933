#pragma once

// Shared JSON (de)serialisation for types that appear in several documents.

#include <json.hpp>

#include "scamtext/experiment_config.hpp"
#include "scamtext/metrics.hpp"

namespace scamtext::detail {

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& doc);

nlohmann::json metric_to_json(Metric m);
Metric metric_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EvalReport& r);
EvalReport report_from_json(const nlohmann::json& j);

}  // namespace scamtext::detail
