// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "barter/model.hpp"

namespace barter {

// An (unordered, partial) matching over agent ids: pairs stored as (lo, hi),
// list sorted ascending. Agents may appear at most once.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const Matching&, const Matching&) = default;
};

enum class Objective { UtilitarianSum, EgalitarianMin };

struct WelfareReport {
  Matching matching;
  double total = 0.0;                       // sum of per-agent satisfactions
  double minimum = 0.0;                     // worst-off agent's satisfaction
  std::map<int, double> per_agent;          // baseline: unmatched sit at beta
};

// How many agents exhaustive enumeration will accept. Partial matchings grow
// like the telephone numbers (140,152 at n = 12); beyond that the oracle
// refuses with a GuardError rather than hang.
inline constexpr std::size_t kMaxOracleAgents = 12;

// Throws ValidationError when `matching` references unknown ids, repeats an
// agent, or pairs an agent with itself.
void validate(const Matching& matching, const std::vector<Agent>& population);

// Visits every partial matching of the population exactly once (the empty
// matching included). Throws GuardError when the population exceeds
// kMaxOracleAgents.
void for_each_matching(const std::vector<Agent>& population,
                       const std::function<void(const Matching&)>& visit);

// Materialized version of for_each_matching.
std::vector<Matching> enumerate_matchings(const std::vector<Agent>& population);

// Per-agent satisfactions under `matching` with unmatched agents at their
// frustration-free fallback beta, plus the two welfare aggregates.
WelfareReport evaluate(const Matching& matching, const std::vector<Agent>& population);

// Exhaustive argmax of the objective over all partial matchings. Exact value
// ties are broken toward the lexicographically smallest sorted pair list, so
// the result is unique and deterministic.
WelfareReport max_welfare_matching(const std::vector<Agent>& population,
                                   Objective objective);

// Pairs (i, j) not matched together where both would strictly gain over their
// current standing (partner's offer if matched, beta otherwise). Sorted.
std::vector<std::pair<int, int>> blocking_pairs(const Matching& matching,
                                                const std::vector<Agent>& population);

// True when every matched agent's satisfaction strictly exceeds its beta.
// This is a frustration-free audit: a run whose matches were enabled by
// decayed reservations can legitimately fail it.
bool is_individually_rational(const Matching& matching,
                              const std::vector<Agent>& population);

}  // namespace barter
