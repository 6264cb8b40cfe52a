// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "barter/scenario.hpp"

// Scenario files are strict JSON: every field is checked, unknown fields are
// rejected, and diagnostics name the offending field (and agent). Parsing and
// serialization round-trip losslessly, doubles included.

namespace barter {

ScenarioSpec parse_scenario(const nlohmann::json& doc);
ScenarioSpec parse_scenario_text(const std::string& text);
nlohmann::json scenario_to_json(const ScenarioSpec& spec);

// File convenience wrappers. Load throws ValidationError on unreadable files
// or malformed content; save writes pretty-printed JSON with a trailing
// newline.
ScenarioSpec load_scenario(const std::string& path);
void save_scenario(const ScenarioSpec& spec, const std::string& path);

std::string strategy_name(Policy policy);
Policy strategy_from_name(const std::string& name);

}  // namespace barter
