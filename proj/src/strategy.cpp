// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/strategy.hpp"

#include <algorithm>

#include "barter/errors.hpp"

namespace barter {

void validate(const StrategyKind& kind) {
  if (kind.policy == Policy::GreedyTopK && kind.k && *kind.k < 1)
    throw ValidationError("strategy: greedy_top_k requires k >= 1");
}

std::vector<RankedCandidate> rank_candidates(const Agent& self,
                                             const std::vector<const Agent*>& candidates,
                                             const FrustrationState& frustration) {
  std::vector<RankedCandidate> ranked;
  ranked.reserve(candidates.size());
  for (const Agent* c : candidates) {
    if (acceptable(self, c->offer, frustration))
      ranked.push_back({c->id, satisfaction(self, c->offer)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    if (a.satisfaction != b.satisfaction) return a.satisfaction > b.satisfaction;
    return a.target_id < b.target_id;
  });
  return ranked;
}

// Uniform draw among the leading candidates tied (bit-exactly) with the best.
static int draw_among_best(const std::vector<RankedCandidate>& ranked, SubStream& rng) {
  std::size_t tied = 1;
  while (tied < ranked.size() && ranked[tied].satisfaction == ranked[0].satisfaction) ++tied;
  return ranked[rng.uniform_index(tied)].target_id;
}

std::vector<int> select_allure_targets(const Agent& self,
                                       const std::vector<const Agent*>& pool,
                                       const FrustrationState& frustration,
                                       const StrategyKind& kind, SubStream& rng) {
  validate(kind);
  const auto ranked = rank_candidates(self, pool, frustration);
  if (ranked.empty()) return {};

  if (kind.policy == Policy::RandomAmongBest) return {draw_among_best(ranked, rng)};

  std::size_t take = ranked.size();
  if (kind.k) take = std::min(take, static_cast<std::size_t>(*kind.k));
  std::vector<int> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(ranked[i].target_id);
  return out;
}

static std::optional<int> select_best(const Agent& self,
                                      const std::vector<const Agent*>& offers,
                                      const FrustrationState& frustration,
                                      const StrategyKind& kind, SubStream& rng) {
  validate(kind);
  const auto ranked = rank_candidates(self, offers, frustration);
  if (ranked.empty()) return std::nullopt;
  if (kind.policy == Policy::RandomAmongBest) return draw_among_best(ranked, rng);
  return ranked[0].target_id;
}

std::optional<int> select_accept(const Agent& self,
                                 const std::vector<const Agent*>& allurers,
                                 const FrustrationState& frustration,
                                 const StrategyKind& kind, SubStream& rng) {
  return select_best(self, allurers, frustration, kind, rng);
}

std::optional<int> select_confirm(const Agent& self,
                                  const std::vector<const Agent*>& accepts,
                                  const FrustrationState& frustration,
                                  const StrategyKind& kind, SubStream& rng) {
  return select_best(self, accepts, frustration, kind, rng);
}

}  // namespace barter
