// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "barter/errors.hpp"

using nlohmann::json;

namespace barter {

namespace {

constexpr int kSchemaVersion = 1;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError("scenario: " + where + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key)) fail(where, "unknown field \"" + key + "\"");
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<int>();
}

Point point(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of numbers");
  if (v.size() != dim)
    fail(where, "expected " + std::to_string(dim) + " coordinates, got " +
                    std::to_string(v.size()));
  Point p;
  for (const auto& x : v) p.push_back(number(x, where));
  return p;
}

StrategyKind parse_strategy(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  reject_unknown(v, {"kind", "k"}, where);
  const json& kind = field(v, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected a string");

  StrategyKind out;
  out.policy = strategy_from_name(kind.get<std::string>());
  if (auto it = v.find("k"); it != v.end() && !it->is_null()) {
    if (out.policy != Policy::GreedyTopK)
      fail(where, "\"k\" only applies to greedy_top_k");
    out.k = integer(*it, where + ".k");
    if (*out.k < 1) fail(where + ".k", "must be >= 1");
  }
  return out;
}

ExpectedOutcome parse_expected(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  reject_unknown(v, {"matching", "unmatched", "note"}, where);
  ExpectedOutcome out;
  if (auto it = v.find("matching"); it != v.end()) {
    if (!it->is_array()) fail(where + ".matching", "expected an array of [i, j] pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2)
        fail(where + ".matching", "expected [i, j] pairs");
      pairs.push_back({integer(p[0], where + ".matching"), integer(p[1], where + ".matching")});
    }
    out.matching = std::move(pairs);
  }
  if (auto it = v.find("unmatched"); it != v.end()) {
    if (!it->is_array()) fail(where + ".unmatched", "expected an array of ids");
    std::vector<int> ids;
    for (const auto& x : *it) ids.push_back(integer(x, where + ".unmatched"));
    out.unmatched = std::move(ids);
  }
  if (auto it = v.find("note"); it != v.end()) {
    if (!it->is_string()) fail(where + ".note", "expected a string");
    out.note = it->get<std::string>();
  }
  return out;
}

}  // namespace

std::string strategy_name(Policy policy) {
  switch (policy) {
    case Policy::GreedyTopK: return "greedy_top_k";
    case Policy::RandomAmongBest: return "random_among_best";
  }
  throw std::logic_error("strategy_name: unhandled policy");
}

Policy strategy_from_name(const std::string& name) {
  if (name == "greedy_top_k") return Policy::GreedyTopK;
  if (name == "random_among_best") return Policy::RandomAmongBest;
  throw ValidationError("scenario: unknown strategy \"" + name +
                        "\" (expected greedy_top_k or random_among_best)");
}

ScenarioSpec parse_scenario(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  reject_unknown(doc, {"schema_version", "name", "dimension", "engine", "agents", "expected"},
                 "document");

  if (integer(field(doc, "schema_version", "document"), "schema_version") != kSchemaVersion)
    fail("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");

  ScenarioSpec spec;
  const json& name = field(doc, "name", "document");
  if (!name.is_string()) fail("name", "expected a string");
  spec.name = name.get<std::string>();

  const int dim = integer(field(doc, "dimension", "document"), "dimension");
  if (dim < 1) fail("dimension", "must be >= 1");
  spec.dimension = static_cast<std::size_t>(dim);

  const json& engine = field(doc, "engine", "document");
  if (!engine.is_object()) fail("engine", "expected an object");
  reject_unknown(engine, {"seed", "max_rounds", "strategy"}, "engine");
  const json& seed = field(engine, "seed", "engine");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    fail("engine.seed", "expected an integer");
  if (seed.is_number_integer() && seed.get<std::int64_t>() < 0)
    fail("engine.seed", "must be >= 0");
  spec.engine.seed = seed.get<std::uint64_t>();
  spec.engine.max_rounds = integer(field(engine, "max_rounds", "engine"), "engine.max_rounds");
  if (spec.engine.max_rounds < 1) fail("engine.max_rounds", "must be >= 1");
  spec.engine.default_strategy = parse_strategy(field(engine, "strategy", "engine"),
                                                "engine.strategy");

  const json& agents = field(doc, "agents", "document");
  if (!agents.is_array()) fail("agents", "expected an array");
  std::set<int> ids;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    const json& a = agents[i];
    if (!a.is_object()) fail(where, "expected an object");
    reject_unknown(a, {"id", "demand", "offer", "alpha", "beta", "gamma"}, where);
    Agent agent;
    agent.id = integer(field(a, "id", where), where + ".id");
    if (!ids.insert(agent.id).second)
      fail(where, "duplicate agent id " + std::to_string(agent.id));
    agent.demand = point(field(a, "demand", where), spec.dimension, where + ".demand");
    agent.offer = point(field(a, "offer", where), spec.dimension, where + ".offer");
    agent.alpha = number(field(a, "alpha", where), where + ".alpha");
    agent.beta = number(field(a, "beta", where), where + ".beta");
    agent.gamma = number(field(a, "gamma", where), where + ".gamma");
    validate(agent);  // range checks with the agent id in the message
    spec.agents.push_back(std::move(agent));
  }

  if (auto it = doc.find("expected"); it != doc.end())
    spec.expected = parse_expected(*it, "expected");
  return spec;
}

ScenarioSpec parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario: invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

json scenario_to_json(const ScenarioSpec& spec) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = spec.name;
  doc["dimension"] = spec.dimension;

  json strategy;
  strategy["kind"] = strategy_name(spec.engine.default_strategy.policy);
  if (spec.engine.default_strategy.k) strategy["k"] = *spec.engine.default_strategy.k;
  doc["engine"] = {{"seed", spec.engine.seed},
                   {"max_rounds", spec.engine.max_rounds},
                   {"strategy", strategy}};

  doc["agents"] = json::array();
  for (const Agent& a : spec.agents) {
    doc["agents"].push_back({{"id", a.id},
                             {"demand", a.demand},
                             {"offer", a.offer},
                             {"alpha", a.alpha},
                             {"beta", a.beta},
                             {"gamma", a.gamma}});
  }

  if (spec.expected) {
    json expected = json::object();
    if (spec.expected->matching) {
      expected["matching"] = json::array();
      for (const auto& [i, j] : *spec.expected->matching)
        expected["matching"].push_back({i, j});
    }
    if (spec.expected->unmatched) expected["unmatched"] = *spec.expected->unmatched;
    if (!spec.expected->note.empty()) expected["note"] = spec.expected->note;
    doc["expected"] = expected;
  }
  return doc;
}

ScenarioSpec load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("scenario: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

void save_scenario(const ScenarioSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("scenario: cannot write \"" + path + "\"");
  out << scenario_to_json(spec).dump(2) << "\n";
}

}  // namespace barter
