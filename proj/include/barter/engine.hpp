// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "barter/model.hpp"
#include "barter/strategy.hpp"

namespace barter {

struct EngineConfig {
  std::uint64_t seed = 0;
  int max_rounds = 64;
  StrategyKind default_strategy;  // every agent runs this policy

  friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

// A directed protocol message within one round.
struct Message {
  int from = 0;
  int to = 0;
  friend bool operator==(const Message&, const Message&) = default;
};

struct RoundLog {
  int round = 0;  // 1-based
  std::vector<Message> allures;
  std::vector<Message> accepts;   // from accepted to's allure, i.e. answers allures
  std::vector<Message> confirms;  // seals a deal; answers accepts
  std::vector<Message> defects;   // an accept that was not confirmed
  std::vector<std::pair<int, int>> matches;  // formed this round, (lo, hi)
  std::map<int, int> frustration_increments;
};

enum class Termination { AllMatched, Quiescent, MaxRounds };

struct Outcome {
  std::vector<std::pair<int, int>> matching;  // (lo, hi) pairs, sorted
  std::map<int, double> final_satisfaction;   // matched: from partner's offer; else beta*gamma^m
  std::map<int, int> final_frustration;
  std::vector<RoundLog> rounds;
  int rounds_executed = 0;
  Termination termination = Termination::Quiescent;
};

// Phase-synchronous round loop over one shared pool of unmatched agents.
//
// Each round runs three simultaneous phases:
//   allure  - every pooled agent picks targets from the same pre-round state;
//   accept  - every allured agent answers at most one allure, judged against
//             its current (frustration-lowered) reservation;
//   confirm - an agent that issued an accept is committed: it confirms its
//             accepted counterparty exactly when that accept was mutual, and
//             otherwise waits on the counterparty's decision. An agent that
//             accepted nobody confirms the best accept it received.
//
// A pair matches when allure, accept and confirm line up in either direction.
// The committed/waiting rule above makes the overall matching a partial
// matching by construction: within a round an agent can be sealed through its
// single issued accept or through its single issued confirm, never both.
//
// After the round every agent adds to m one count per allure it issued that
// did not end in its own match, plus one more if an accept it issued was
// defected. Matched pairs leave the pool.
//
// Randomness (only consulted for RandomAmongBest tie draws) comes from
// per-(round, phase, agent) sub-streams derived from the config seed, so runs
// are deterministic and independent of iteration order.
class Engine {
 public:
  // Validates agents (parameter ranges, uniform dimension, unique ids) and
  // the config (max_rounds >= 1). Empty populations are legal and terminate
  // immediately as quiescent with zero rounds executed.
  Engine(std::vector<Agent> population, EngineConfig config);

  bool terminated() const { return terminated_; }

  // Runs one round. Must not be called after termination.
  const RoundLog& run_round();

  // Snapshot of results so far; `termination` is meaningful once terminated().
  Outcome outcome() const;

  const std::vector<Agent>& population() const { return population_; }
  const EngineConfig& config() const { return config_; }

 private:
  const Agent& by_id(int id) const;

  std::vector<Agent> population_;  // sorted by id
  EngineConfig config_;
  std::vector<int> pool_;               // unmatched ids, ascending
  std::map<int, int> frustration_;      // id -> m
  std::map<int, int> matched_with_;     // id -> partner id
  std::vector<RoundLog> rounds_;
  bool terminated_ = false;
  Termination termination_ = Termination::Quiescent;
};

// Convenience: run rounds until all matched, a round issues no allures, or
// config.max_rounds is reached.
Outcome run_to_completion(std::vector<Agent> population, const EngineConfig& config);

// True when every matched pair in `outcome` beat both parties' reservations
// as they stood when the pair was confirmed (reconstructed from the round
// logs). This is the rationality notion the round loop enforces.
bool outcome_individually_rational(const Outcome& outcome,
                                   const std::vector<Agent>& population);

}  // namespace barter
