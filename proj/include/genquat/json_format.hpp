#pragma once

#include <string>

#include "json.hpp"

namespace genquat {

// Shortest decimal that round-trips, switched to `precision` significant
// digits when the shortest form needs more. -0 prints as 0.
std::string format_number(double x, int precision = 17);

// Compact JSON with numbers rendered by format_number.
std::string dump(const nlohmann::ordered_json& j, int precision = 17);

}  // namespace genquat
