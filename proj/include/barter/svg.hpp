// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "barter/engine.hpp"
#include "barter/scenario.hpp"

namespace barter {

// Renders the scenario's geometry as standalone SVG: one demand circle per
// agent (radius = the agent's frustration-free reservation radius), one offer
// dot, a thin link between them, and, when an outcome is supplied, a dashed
// edge between matched partners. One-dimensional scenarios are laid out on a
// horizontal axis; dimensions above two raise a GuardError (project the data
// first).
std::string geometry_svg(const ScenarioSpec& spec, const Outcome* outcome = nullptr);

}  // namespace barter
