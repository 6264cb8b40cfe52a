// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "barter/engine.hpp"
#include "barter/oracle.hpp"
#include "barter/scenario.hpp"

namespace barter {

// Shortest-round-trip decimal rendering (std::to_chars), identical on every
// conforming toolchain. Used wherever doubles land in CSV or SVG.
std::string format_double(double value);

std::string termination_name(Termination t);
std::string objective_name(Objective o);
Objective objective_from_name(const std::string& name);

// Full machine-readable record of one run: configuration, per-agent results,
// the matching, and the round-by-round message log. Serializing the same run
// twice yields byte-identical text (keys are sorted, doubles round-trip).
nlohmann::json result_to_json(const ScenarioSpec& spec, const EngineConfig& config,
                              const Outcome& outcome);

// One CSV row per agent: id, matched_with (empty when unmatched),
// satisfaction, frustration.
std::string result_to_csv(const ScenarioSpec& spec, const Outcome& outcome);

// Engine outcome vs. exhaustive optimum side by side, with the welfare gap
// (in the frustration-free baseline), blocking pairs, and both rationality
// verdicts. Population must be within the oracle's size guard.
nlohmann::json oracle_report(const ScenarioSpec& spec, const EngineConfig& config,
                             const Outcome& outcome, Objective objective);

// Console table for humans, satisfactions rendered as percentages.
std::string human_summary(const ScenarioSpec& spec, const Outcome& outcome);

}  // namespace barter
