// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "barter/errors.hpp"

namespace barter {

void validate(const Matching& matching, const std::vector<Agent>& population) {
  std::set<int> known;
  for (const Agent& a : population) known.insert(a.id);
  std::set<int> seen;
  for (const auto& [i, j] : matching.pairs) {
    if (i == j)
      throw ValidationError("matching: agent " + std::to_string(i) + " paired with itself");
    for (int id : {i, j}) {
      if (!known.count(id))
        throw ValidationError("matching: unknown agent id " + std::to_string(id));
      if (!seen.insert(id).second)
        throw ValidationError("matching: agent " + std::to_string(id) +
                              " appears in more than one pair");
    }
  }
}

namespace {

void enumerate_rec(const std::vector<int>& ids, std::vector<bool>& used,
                   std::size_t first_free, Matching& current,
                   const std::function<void(const Matching&)>& visit) {
  while (first_free < ids.size() && used[first_free]) ++first_free;
  if (first_free == ids.size()) {
    visit(current);
    return;
  }
  used[first_free] = true;
  // Lowest free agent stays single...
  enumerate_rec(ids, used, first_free + 1, current, visit);
  // ...or pairs with each later free agent.
  for (std::size_t j = first_free + 1; j < ids.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    current.pairs.push_back({ids[first_free], ids[j]});
    enumerate_rec(ids, used, first_free + 1, current, visit);
    current.pairs.pop_back();
    used[j] = false;
  }
  used[first_free] = false;
}

}  // namespace

void for_each_matching(const std::vector<Agent>& population,
                       const std::function<void(const Matching&)>& visit) {
  if (population.size() > kMaxOracleAgents)
    throw GuardError("oracle: exhaustive enumeration supports at most " +
                     std::to_string(kMaxOracleAgents) + " agents, got " +
                     std::to_string(population.size()));
  std::vector<int> ids;
  for (const Agent& a : population) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  std::vector<bool> used(ids.size(), false);
  Matching current;
  enumerate_rec(ids, used, 0, current, visit);
}

std::vector<Matching> enumerate_matchings(const std::vector<Agent>& population) {
  std::vector<Matching> out;
  for_each_matching(population, [&out](const Matching& m) { out.push_back(m); });
  return out;
}

WelfareReport evaluate(const Matching& matching, const std::vector<Agent>& population) {
  validate(matching, population);
  WelfareReport report;
  report.matching = matching;
  std::sort(report.matching.pairs.begin(), report.matching.pairs.end());

  std::map<int, const Agent*> by_id;
  for (const Agent& a : population) by_id[a.id] = &a;
  for (const Agent& a : population) report.per_agent[a.id] = a.beta;
  for (const auto& [i, j] : matching.pairs) {
    report.per_agent[i] = satisfaction(*by_id.at(i), by_id.at(j)->offer);
    report.per_agent[j] = satisfaction(*by_id.at(j), by_id.at(i)->offer);
  }

  report.total = 0.0;
  report.minimum = population.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const auto& [id, s] : report.per_agent) {
    report.total += s;
    report.minimum = std::min(report.minimum, s);
  }
  return report;
}

WelfareReport max_welfare_matching(const std::vector<Agent>& population,
                                   Objective objective) {
  WelfareReport best;
  bool have_best = false;
  for_each_matching(population, [&](const Matching& m) {
    WelfareReport r = evaluate(m, population);
    const double value = (objective == Objective::UtilitarianSum) ? r.total : r.minimum;
    if (!have_best) {
      best = std::move(r);
      have_best = true;
      return;
    }
    const double best_value =
        (objective == Objective::UtilitarianSum) ? best.total : best.minimum;
    if (value > best_value ||
        (value == best_value && r.matching.pairs < best.matching.pairs))
      best = std::move(r);
  });
  return best;  // enumeration always visits the empty matching, so best is set
}

std::vector<std::pair<int, int>> blocking_pairs(const Matching& matching,
                                                const std::vector<Agent>& population) {
  const WelfareReport standing = evaluate(matching, population);
  std::set<std::pair<int, int>> together;
  for (const auto& p : matching.pairs) together.insert(p);

  std::vector<const Agent*> agents;
  for (const Agent& a : population) agents.push_back(&a);
  std::sort(agents.begin(), agents.end(),
            [](const Agent* a, const Agent* b) { return a->id < b->id; });

  std::vector<std::pair<int, int>> blocking;
  for (std::size_t x = 0; x < agents.size(); ++x) {
    for (std::size_t y = x + 1; y < agents.size(); ++y) {
      const Agent& a = *agents[x];
      const Agent& b = *agents[y];
      if (together.count({a.id, b.id})) continue;
      if (satisfaction(a, b.offer) > standing.per_agent.at(a.id) &&
          satisfaction(b, a.offer) > standing.per_agent.at(b.id))
        blocking.push_back({a.id, b.id});
    }
  }
  return blocking;
}

bool is_individually_rational(const Matching& matching,
                              const std::vector<Agent>& population) {
  validate(matching, population);
  std::map<int, const Agent*> by_id;
  for (const Agent& a : population) by_id[a.id] = &a;
  for (const auto& [i, j] : matching.pairs) {
    const Agent& a = *by_id.at(i);
    const Agent& b = *by_id.at(j);
    if (!(satisfaction(a, b.offer) > a.beta)) return false;
    if (!(satisfaction(b, a.offer) > b.beta)) return false;
  }
  return true;
}

}  // namespace barter
