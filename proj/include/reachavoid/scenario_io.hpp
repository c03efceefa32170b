#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "reachavoid/scenario.hpp"

namespace reachavoid {

// Parses a scenario document (JSON). A "target" object with start, end and
// target_side_hint gives a raw pose that is normalized into the canonical
// frame; otherwise "target_length" names l directly. Throws ScenarioError
// listing every violation; syntax errors carry line and column.
Scenario parse_scenario(std::string_view text);

// Scenario document in the input frame of `scenario`, suitable for parsing
// back. Coordinates are rounded to 12 significant digits.
nlohmann::json echo_scenario(const Scenario& scenario);

// Round to 12 significant digits, the precision of every emitted number.
double round12(double v);

std::string read_file(const std::string& path);

}  // namespace reachavoid
