// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/result_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "barter/errors.hpp"
#include "barter/scenario_io.hpp"

using nlohmann::json;

namespace barter {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::logic_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::AllMatched: return "all_matched";
    case Termination::Quiescent: return "quiescent";
    case Termination::MaxRounds: return "max_rounds";
  }
  throw std::logic_error("termination_name: unhandled value");
}

std::string objective_name(Objective o) {
  switch (o) {
    case Objective::UtilitarianSum: return "utilitarian_sum";
    case Objective::EgalitarianMin: return "egalitarian_min";
  }
  throw std::logic_error("objective_name: unhandled value");
}

Objective objective_from_name(const std::string& name) {
  if (name == "utilitarian_sum" || name == "utilitarian") return Objective::UtilitarianSum;
  if (name == "egalitarian_min" || name == "egalitarian") return Objective::EgalitarianMin;
  throw ValidationError("oracle: unknown objective \"" + name +
                        "\" (expected utilitarian_sum or egalitarian_min)");
}

namespace {

json messages_to_json(const std::vector<Message>& msgs) {
  json out = json::array();
  for (const auto& m : msgs) out.push_back({m.from, m.to});
  return out;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (const auto& [i, j] : pairs) out.push_back({i, j});
  return out;
}

json config_to_json(const EngineConfig& config) {
  json strategy;
  strategy["kind"] = strategy_name(config.default_strategy.policy);
  if (config.default_strategy.k) strategy["k"] = *config.default_strategy.k;
  return {{"seed", config.seed},
          {"max_rounds", config.max_rounds},
          {"strategy", strategy}};
}

std::map<int, int> partner_map(const Outcome& outcome) {
  std::map<int, int> partner;
  for (const auto& [i, j] : outcome.matching) {
    partner[i] = j;
    partner[j] = i;
  }
  return partner;
}

}  // namespace

json result_to_json(const ScenarioSpec& spec, const EngineConfig& config,
                    const Outcome& outcome) {
  json doc;
  doc["schema_version"] = 1;
  doc["scenario"] = spec.name;
  doc["engine"] = config_to_json(config);
  doc["termination"] = termination_name(outcome.termination);
  doc["rounds_executed"] = outcome.rounds_executed;
  doc["matching"] = pairs_to_json(outcome.matching);

  const auto partner = partner_map(outcome);
  doc["agents"] = json::array();
  for (const Agent& a : spec.agents) {
    json row;
    row["id"] = a.id;
    auto it = partner.find(a.id);
    row["matched_with"] = (it == partner.end()) ? json(nullptr) : json(it->second);
    row["satisfaction"] = outcome.final_satisfaction.at(a.id);
    row["frustration"] = outcome.final_frustration.at(a.id);
    doc["agents"].push_back(std::move(row));
  }

  doc["rounds"] = json::array();
  for (const RoundLog& r : outcome.rounds) {
    json row;
    row["round"] = r.round;
    row["allures"] = messages_to_json(r.allures);
    row["accepts"] = messages_to_json(r.accepts);
    row["confirms"] = messages_to_json(r.confirms);
    row["defects"] = messages_to_json(r.defects);
    row["matches"] = pairs_to_json(r.matches);
    json incs = json::object();
    for (const auto& [id, inc] : r.frustration_increments) incs[std::to_string(id)] = inc;
    row["frustration_increments"] = incs;
    doc["rounds"].push_back(std::move(row));
  }
  return doc;
}

std::string result_to_csv(const ScenarioSpec& spec, const Outcome& outcome) {
  const auto partner = partner_map(outcome);
  std::ostringstream out;
  out << "id,matched_with,satisfaction,frustration\n";
  for (const Agent& a : spec.agents) {
    out << a.id << ",";
    if (auto it = partner.find(a.id); it != partner.end()) out << it->second;
    out << "," << format_double(outcome.final_satisfaction.at(a.id)) << ","
        << outcome.final_frustration.at(a.id) << "\n";
  }
  return out.str();
}

json oracle_report(const ScenarioSpec& spec, const EngineConfig& config,
                   const Outcome& outcome, Objective objective) {
  Matching engine_matching{outcome.matching};
  const WelfareReport engine_eval = evaluate(engine_matching, spec.agents);
  const WelfareReport best = max_welfare_matching(spec.agents, objective);

  double actual_total = 0.0;
  for (const auto& [id, s] : outcome.final_satisfaction) actual_total += s;

  auto report_block = [](const WelfareReport& r) {
    json per_agent = json::object();
    for (const auto& [id, s] : r.per_agent) per_agent[std::to_string(id)] = s;
    return json{{"matching", pairs_to_json(r.matching.pairs)},
                {"total", r.total},
                {"minimum", r.minimum},
                {"per_agent", per_agent}};
  };

  json doc;
  doc["schema_version"] = 1;
  doc["scenario"] = spec.name;
  doc["objective"] = objective_name(objective);
  doc["engine"] = config_to_json(config);
  doc["engine"]["termination"] = termination_name(outcome.termination);
  doc["engine"]["rounds_executed"] = outcome.rounds_executed;
  doc["engine"]["result"] = report_block(engine_eval);
  doc["engine"]["result"]["actual_total"] = actual_total;  // frustrated fallbacks included
  doc["oracle"] = report_block(best);

  const double engine_value =
      (objective == Objective::UtilitarianSum) ? engine_eval.total : engine_eval.minimum;
  const double best_value =
      (objective == Objective::UtilitarianSum) ? best.total : best.minimum;
  const auto blocking = blocking_pairs(engine_matching, spec.agents);
  doc["comparison"] = {
      {"welfare_gap", best_value - engine_value},
      {"blocking_pairs", pairs_to_json(blocking)},
      {"blocking_pair_count", blocking.size()},
      {"individually_rational", is_individually_rational(engine_matching, spec.agents)},
      {"individually_rational_at_confirmation",
       outcome_individually_rational(outcome, spec.agents)},
  };
  return doc;
}

std::string human_summary(const ScenarioSpec& spec, const Outcome& outcome) {
  const auto partner = partner_map(outcome);
  std::ostringstream out;
  out << "scenario " << spec.name << ": " << termination_name(outcome.termination) << " after "
      << outcome.rounds_executed << " round" << (outcome.rounds_executed == 1 ? "" : "s") << ", "
      << outcome.matching.size() << " match" << (outcome.matching.size() == 1 ? "" : "es")
      << "\n";
  out << "  id  partner  satisfaction  frustration\n";
  char line[128];
  for (const Agent& a : spec.agents) {
    std::string with = "-";
    if (auto it = partner.find(a.id); it != partner.end()) with = std::to_string(it->second);
    std::snprintf(line, sizeof line, "  %-4d%-9s%11.2f%%  %11d\n", a.id, with.c_str(),
                  100.0 * outcome.final_satisfaction.at(a.id),
                  outcome.final_frustration.at(a.id));
    out << line;
  }
  return out.str();
}

}  // namespace barter
