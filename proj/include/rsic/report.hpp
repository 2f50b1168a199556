#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rsic/algorithms.hpp"
#include "rsic/analysis.hpp"
#include "rsic/model.hpp"
#include "rsic/optimal.hpp"

namespace rsic {

using Json = nlohmann::ordered_json;

/// Fixed six-decimal rendering, used for the human-readable column.
[[nodiscard]] std::string decimal(const Rational& value);
/// {"exact": "p/q", "approx": "0.500000"}
[[nodiscard]] Json toJson(const Rational& value);

[[nodiscard]] Json instanceDigest(const Instance& instance);
[[nodiscard]] Json toJson(const AlgorithmTrace& trace);
/// Active server count at every event time.
[[nodiscard]] Json activeProfile(const Schedule& schedule);
[[nodiscard]] Json toJson(const OptResult& result);
[[nodiscard]] Json toJson(const InequalityCheck& check);
[[nodiscard]] Json toJson(const WeightReport& report);
[[nodiscard]] Json toJson(const RatioReport& report);
[[nodiscard]] Json toJson(const ServerTypeInfo& info);

}  // namespace rsic
