#pragma once

#include <string>
#include <vector>

#include "hexfluid/simulator.hpp"

#include "json.hpp"

namespace hexfluid {

// Table of built-in scenarios (scenario1..scenario6).
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
Scenario preset_scenario(const std::string& name);

// Flat `key = value` config text; angles in degrees in the file. Throws
// ParseError / ValidationError naming the offending line or field.
Scenario parse_scenario_text(const std::string& text, const std::string& origin);

// Preset name or path to a config file.
Scenario load_scenario(const std::string& path_or_preset);

// Invariant checks; throws ValidationError naming the field.
void validate_scenario(const Scenario& s);

// Non-fatal model-validity notes (e.g. tilt smaller than vertical beamwidth).
std::vector<std::string> scenario_warnings(const Scenario& s);

// Fully resolved scenario, for summary.json reproducibility.
nlohmann::ordered_json scenario_to_json(const Scenario& s);

}  // namespace hexfluid
