// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "barter/scenario.hpp"

namespace barter {

// A linear grid over one model parameter. alpha/beta/gamma overrides apply to
// every agent; k swaps the strategy for greedy_top_k with that cap (grid
// values rounded to the nearest integer).
struct SweepRequest {
  std::string parameter;  // alpha | beta | gamma | k
  double from = 0.0;
  double to = 0.0;
  int steps = 2;  // >= 2
};

// One engine run per grid point, each with a seed derived from the scenario
// seed and the grid index. Returns CSV with columns: parameter, value,
// matches, mean_satisfaction, min_satisfaction, mean_frustration,
// blocking_pairs (left empty beyond the oracle's population guard).
std::string sweep_csv(const ScenarioSpec& spec, const SweepRequest& request);

}  // namespace barter
