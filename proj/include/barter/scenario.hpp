// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barter/engine.hpp"
#include "barter/model.hpp"

namespace barter {

// Golden annotations carried by the built-in scenarios: what a default-config
// run is known to produce. Purely documentary; the engine never reads them.
struct ExpectedOutcome {
  std::optional<std::vector<std::pair<int, int>>> matching;
  std::optional<std::vector<int>> unmatched;
  std::string note;

  friend bool operator==(const ExpectedOutcome&, const ExpectedOutcome&) = default;
};

struct ScenarioSpec {
  std::string name;
  std::size_t dimension = 1;
  std::vector<Agent> agents;
  EngineConfig engine;  // suggested run configuration
  std::optional<ExpectedOutcome> expected;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

// n identical agents on a 1-d axis whose demand equals their offer (perfectly
// interchangeable partners). Even n pairs everyone off at full satisfaction;
// odd n strands exactly one agent.
ScenarioSpec seesaw_uniform(int n, double weight = 5.0, double alpha = 0.04,
                            double beta = 0.1, double gamma = 0.5);

// Distinct 1-d positions, demand == offer == position; agents are numbered in
// input order. With the canonical positions (0, 7, 11, 18), alpha 0.04,
// beta 0.001, gamma 0.1 the middle pair trades first and the stranded outer
// agents, reservations worn down, settle for each other at a satisfaction
// several orders below beta.
ScenarioSpec seesaw_line(const std::vector<double>& positions, double alpha = 0.04,
                         double beta = 0.001, double gamma = 0.1);

// Four agents whose demands sit at the compass points of the unit circle and
// whose offers sit a quarter turn ahead, so each agent's perfect partner
// forms a 4-cycle (1->4->3->2->1) and every pairing is distance 0, sqrt(2) or
// 2. Run with the suggested top-2 strategy, agents 1&3 and 2&4 pair up and
// everyone lands on the middle satisfaction level exp(-2 alpha).
ScenarioSpec cycling_ring(double alpha = 1.0, double beta = 0.01, double gamma = 0.5);

enum class BipartiteCase { Match, Dismatch, Popular, Boredom };

// Two-sided populations in the plane (side 1: ids 1..n1, side 2: n1+1..n1+n2):
//   Match    - every side-1 demand coincides with a unique side-2 offer and
//              vice versa (requires n1 == n2); a perfect matching at full
//              satisfaction forms in one round.
//   Dismatch - every demand sits at least ten reservation radii from every
//              offer; nobody allures and everyone keeps beta.
//   Popular  - agent 1's offer hits every side-2 demand exactly; it is courted
//              by all of side 2 and matches its own best partner (id n1+1).
//   Boredom  - every side-2 demand hits agent 1's offer, and the side-2 offers
//              surround agent 1's demand at equal distance (exactly equal for
//              even n2, where offers come in opposite axis-unit pairs), so
//              agent 1 is indifferent and the id tie-break picks n1+1.
ScenarioSpec bipartite_case(BipartiteCase which, int n1, int n2, double alpha = 1.0,
                            double beta = 0.1, double gamma = 0.5);

struct ParamRanges {
  std::pair<double, double> coordinate{0.0, 8.0};
  std::pair<double, double> alpha{0.1, 1.5};
  std::pair<double, double> beta{0.05, 0.3};
  std::pair<double, double> gamma{0.5, 0.9};
};

// n agents with demand/offer coordinates and parameters drawn uniformly from
// the given ranges, deterministically from `seed`.
ScenarioSpec random_population(int n, std::size_t d, std::uint64_t seed,
                               const ParamRanges& ranges = {});

}  // namespace barter
