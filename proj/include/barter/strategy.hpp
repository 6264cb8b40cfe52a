// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <vector>

#include "barter/model.hpp"
#include "barter/rng.hpp"

namespace barter {

enum class Policy {
  GreedyTopK,       // allure the k best acceptable counterparties
  RandomAmongBest,  // allure exactly one, drawn uniformly among the best-tied
};

struct StrategyKind {
  Policy policy = Policy::GreedyTopK;
  // Only meaningful for GreedyTopK; nullopt means "no cap" (allure every
  // acceptable counterparty). When set it must be >= 1.
  std::optional<int> k;

  friend bool operator==(const StrategyKind&, const StrategyKind&) = default;
};

struct RankedCandidate {
  int target_id = 0;
  double satisfaction = 0.0;
};

// Acceptable candidates ranked by descending satisfaction; exact satisfaction
// ties are broken by ascending id so the ordering is fully deterministic.
std::vector<RankedCandidate> rank_candidates(const Agent& self,
                                             const std::vector<const Agent*>& candidates,
                                             const FrustrationState& frustration);

// Whom to allure this round. `pool` must not contain `self`. GreedyTopK
// returns up to k targets in rank order; RandomAmongBest returns one target
// drawn uniformly (via `rng`) among the candidates whose satisfaction exactly
// ties the maximum. Empty when nothing in the pool is acceptable.
std::vector<int> select_allure_targets(const Agent& self,
                                       const std::vector<const Agent*>& pool,
                                       const FrustrationState& frustration,
                                       const StrategyKind& kind, SubStream& rng);

// Which allurer to accept: the acceptable one with maximal satisfaction, or
// nothing. Ties resolve like select_allure_targets (id under GreedyTopK, a
// uniform draw among exact ties under RandomAmongBest).
std::optional<int> select_accept(const Agent& self,
                                 const std::vector<const Agent*>& allurers,
                                 const FrustrationState& frustration,
                                 const StrategyKind& kind, SubStream& rng);

// Which received accept to confirm. Same selection rule as select_accept;
// the engine decides which accepts an agent is in a position to confirm.
std::optional<int> select_confirm(const Agent& self,
                                  const std::vector<const Agent*>& accepts,
                                  const FrustrationState& frustration,
                                  const StrategyKind& kind, SubStream& rng);

// Parameter check: GreedyTopK with k < 1 is rejected.
void validate(const StrategyKind& kind);

}  // namespace barter
