// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "barter/errors.hpp"
#include "barter/rng.hpp"

namespace barter {

namespace {
enum Phase : std::uint64_t { kAllure = 1, kAccept = 2, kConfirm = 3 };
}

Engine::Engine(std::vector<Agent> population, EngineConfig config)
    : population_(std::move(population)), config_(config) {
  if (config_.max_rounds < 1)
    throw ValidationError("engine: max_rounds must be >= 1");
  validate(config_.default_strategy);

  std::sort(population_.begin(), population_.end(),
            [](const Agent& a, const Agent& b) { return a.id < b.id; });
  std::size_t dim = 0;
  for (std::size_t i = 0; i < population_.size(); ++i) {
    const Agent& a = population_[i];
    validate(a);
    if (i > 0 && a.id == population_[i - 1].id)
      throw ValidationError("engine: duplicate agent id " + std::to_string(a.id));
    if (i == 0)
      dim = a.demand.size();
    else if (a.demand.size() != dim)
      throw ValidationError("engine: agent " + std::to_string(a.id) + " has dimension " +
                            std::to_string(a.demand.size()) + ", expected " +
                            std::to_string(dim));
  }

  for (const Agent& a : population_) {
    pool_.push_back(a.id);
    frustration_[a.id] = 0;
  }
  if (population_.empty()) terminated_ = true;  // nothing to do: quiescent
}

const Agent& Engine::by_id(int id) const {
  auto it = std::lower_bound(population_.begin(), population_.end(), id,
                             [](const Agent& a, int v) { return a.id < v; });
  if (it == population_.end() || it->id != id)
    throw ValidationError("engine: unknown agent id " + std::to_string(id));
  return *it;
}

const RoundLog& Engine::run_round() {
  if (terminated_) throw std::logic_error("engine: run_round called after termination");

  RoundLog log;
  log.round = static_cast<int>(rounds_.size()) + 1;
  const std::uint64_t round_no = static_cast<std::uint64_t>(log.round);

  // Allure: everyone decides against the same pre-round pool.
  std::map<int, std::vector<int>> allured_by;  // target -> allurers (ascending)
  std::map<int, std::vector<int>> allures_of;  // allurer -> targets
  for (int id : pool_) {
    const Agent& self = by_id(id);
    std::vector<const Agent*> others;
    others.reserve(pool_.size() - 1);
    for (int other : pool_)
      if (other != id) others.push_back(&by_id(other));
    SubStream rng(derive_seed(config_.seed, round_no, kAllure,
                              static_cast<std::uint64_t>(static_cast<std::int64_t>(id))));
    FrustrationState fs{id, frustration_.at(id)};
    auto targets = select_allure_targets(self, others, fs, config_.default_strategy, rng);
    allures_of[id] = targets;
    for (int t : targets) {
      log.allures.push_back({id, t});
      allured_by[t].push_back(id);
    }
  }

  if (log.allures.empty()) {
    terminated_ = true;
    termination_ = Termination::Quiescent;
    rounds_.push_back(std::move(log));
    return rounds_.back();
  }

  // Accept: answer at most one allure.
  std::map<int, int> accept_of;                 // accepter -> accepted allurer
  std::map<int, std::vector<int>> accepts_for;  // allurer -> accepters (ascending)
  for (int id : pool_) {
    auto it = allured_by.find(id);
    if (it == allured_by.end()) continue;
    const Agent& self = by_id(id);
    std::vector<const Agent*> allurers;
    allurers.reserve(it->second.size());
    for (int a : it->second) allurers.push_back(&by_id(a));
    SubStream rng(derive_seed(config_.seed, round_no, kAccept,
                              static_cast<std::uint64_t>(static_cast<std::int64_t>(id))));
    FrustrationState fs{id, frustration_.at(id)};
    if (auto chosen = select_accept(self, allurers, fs, config_.default_strategy, rng)) {
      accept_of[id] = *chosen;
      accepts_for[*chosen].push_back(id);
      log.accepts.push_back({id, *chosen});
    }
  }

  // Confirm. An agent that issued an accept is committed to it and confirms
  // only the mutual case; a free agent confirms its best received accept.
  std::set<std::pair<int, int>> formed;
  for (int id : pool_) {
    std::vector<int> eligible;
    if (auto it = accept_of.find(id); it != accept_of.end()) {
      const int committed_to = it->second;
      const auto& recv = accepts_for[id];
      if (std::find(recv.begin(), recv.end(), committed_to) != recv.end())
        eligible.push_back(committed_to);
    } else if (auto rt = accepts_for.find(id); rt != accepts_for.end()) {
      eligible = rt->second;
    }
    if (eligible.empty()) continue;

    const Agent& self = by_id(id);
    std::vector<const Agent*> accepters;
    accepters.reserve(eligible.size());
    for (int a : eligible) accepters.push_back(&by_id(a));
    SubStream rng(derive_seed(config_.seed, round_no, kConfirm,
                              static_cast<std::uint64_t>(static_cast<std::int64_t>(id))));
    FrustrationState fs{id, frustration_.at(id)};
    if (auto chosen = select_confirm(self, accepters, fs, config_.default_strategy, rng)) {
      log.confirms.push_back({id, *chosen});
      formed.insert({std::min(id, *chosen), std::max(id, *chosen)});
    }
  }

  std::map<int, int> sealed;  // id -> partner, this round
  for (const auto& [lo, hi] : formed) {
    // The committed/waiting confirm rule guarantees one partner per agent.
    if (sealed.count(lo) || sealed.count(hi))
      throw std::logic_error("engine: round produced a non-partial matching");
    sealed[lo] = hi;
    sealed[hi] = lo;
    log.matches.push_back({lo, hi});
  }

  // Defects: accepts that did not become this round's match for the accepter.
  for (const auto& acc : log.accepts) {
    auto it = sealed.find(acc.from);
    if (it == sealed.end() || it->second != acc.to) log.defects.push_back({acc.to, acc.from});
  }

  // Frustration: failed allures plus defected accepts.
  for (int id : pool_) {
    int inc = 0;
    auto it = sealed.find(id);
    const int partner = (it == sealed.end()) ? -1 : it->second;
    for (int t : allures_of[id])
      if (t != partner) ++inc;
    if (auto a = accept_of.find(id); a != accept_of.end() && a->second != partner) ++inc;
    if (inc > 0) {
      frustration_[id] += inc;
      log.frustration_increments[id] = inc;
    }
  }

  for (const auto& [lo, hi] : log.matches) {
    matched_with_[lo] = hi;
    matched_with_[hi] = lo;
    pool_.erase(std::remove(pool_.begin(), pool_.end(), lo), pool_.end());
    pool_.erase(std::remove(pool_.begin(), pool_.end(), hi), pool_.end());
  }

  if (pool_.empty()) {
    terminated_ = true;
    termination_ = Termination::AllMatched;
  } else if (static_cast<int>(rounds_.size()) + 1 >= config_.max_rounds) {
    terminated_ = true;
    termination_ = Termination::MaxRounds;
  }

  rounds_.push_back(std::move(log));
  return rounds_.back();
}

Outcome Engine::outcome() const {
  Outcome out;
  out.rounds = rounds_;
  out.rounds_executed = static_cast<int>(rounds_.size());
  out.termination = termination_;
  for (const auto& [id, partner] : matched_with_)
    if (id < partner) out.matching.push_back({id, partner});
  for (const Agent& a : population_) {
    const int m = frustration_.at(a.id);
    out.final_frustration[a.id] = m;
    auto it = matched_with_.find(a.id);
    out.final_satisfaction[a.id] = (it != matched_with_.end())
                                       ? satisfaction(a, by_id(it->second).offer)
                                       : reservation(a, {a.id, m});
  }
  return out;
}

Outcome run_to_completion(std::vector<Agent> population, const EngineConfig& config) {
  Engine engine(std::move(population), config);
  while (!engine.terminated()) engine.run_round();
  return engine.outcome();
}

bool outcome_individually_rational(const Outcome& outcome,
                                   const std::vector<Agent>& population) {
  std::map<int, const Agent*> by_id;
  for (const Agent& a : population) by_id[a.id] = &a;

  std::map<int, int> m_before;  // frustration as of the start of each round
  for (const auto& a : population) m_before[a.id] = 0;
  for (const RoundLog& log : outcome.rounds) {
    for (const auto& [lo, hi] : log.matches) {
      const Agent& a = *by_id.at(lo);
      const Agent& b = *by_id.at(hi);
      const bool ok_a = satisfaction(a, b.offer) > reservation(a, {lo, m_before.at(lo)});
      const bool ok_b = satisfaction(b, a.offer) > reservation(b, {hi, m_before.at(hi)});
      if (!ok_a || !ok_b) return false;
    }
    for (const auto& [id, inc] : log.frustration_increments) m_before.at(id) += inc;
  }
  return true;
}

}  // namespace barter
