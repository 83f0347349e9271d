#pragma once

#include <string>

#include <json.hpp>

#include "amix/distribution.hpp"

namespace amix {

/// {"type":"atoms","atoms":[[t,p],...]}, {"type":"bernoulli","p":x}, ...
nlohmann::ordered_json to_json(const Distribution& d);
Distribution distribution_from_json(const nlohmann::json& j);
Distribution parse_distribution(const std::string& text);

/// Compact single-line JSON with 17 significant digits per number.
std::string describe(const Distribution& d);

}  // namespace amix
