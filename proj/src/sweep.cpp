// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "barter/engine.hpp"
#include "barter/errors.hpp"
#include "barter/oracle.hpp"
#include "barter/result_io.hpp"
#include "barter/rng.hpp"

namespace barter {

namespace {

void check_request(const SweepRequest& r) {
  if (r.parameter != "alpha" && r.parameter != "beta" && r.parameter != "gamma" &&
      r.parameter != "k")
    throw ValidationError("sweep: unknown parameter \"" + r.parameter +
                          "\" (expected alpha, beta, gamma or k)");
  if (r.steps < 2) throw ValidationError("sweep: steps must be >= 2");
  if (!(r.from <= r.to)) throw ValidationError("sweep: range is inverted");
  if (r.parameter == "alpha" && !(r.from > 0.0))
    throw ValidationError("sweep: alpha values must stay > 0");
  if ((r.parameter == "beta" || r.parameter == "gamma") &&
      !(r.from > 0.0 && r.to < 1.0))
    throw ValidationError("sweep: " + r.parameter + " values must stay inside (0,1)");
  if (r.parameter == "k" && std::llround(r.from) < 1)
    throw ValidationError("sweep: k values must be >= 1");
}

}  // namespace

std::string sweep_csv(const ScenarioSpec& spec, const SweepRequest& request) {
  check_request(request);

  std::ostringstream out;
  out << "parameter,value,matches,mean_satisfaction,min_satisfaction,mean_frustration,"
         "blocking_pairs\n";

  for (int i = 0; i < request.steps; ++i) {
    const double value =
        request.from + (request.to - request.from) * i / (request.steps - 1);

    std::vector<Agent> agents = spec.agents;
    EngineConfig config = spec.engine;
    config.seed = derive_seed(spec.engine.seed, static_cast<std::uint64_t>(i), 0x53eedULL);

    std::string value_text;
    if (request.parameter == "k") {
      const int k = static_cast<int>(std::llround(value));
      config.default_strategy = {Policy::GreedyTopK, k};
      value_text = std::to_string(k);
    } else {
      for (Agent& a : agents) {
        if (request.parameter == "alpha") a.alpha = value;
        else if (request.parameter == "beta") a.beta = value;
        else a.gamma = value;
      }
      value_text = format_double(value);
    }

    const Outcome outcome = run_to_completion(agents, config);

    double sum = 0.0;
    double min_s = outcome.final_satisfaction.empty()
                       ? 0.0
                       : std::numeric_limits<double>::infinity();
    for (const auto& [id, s] : outcome.final_satisfaction) {
      sum += s;
      min_s = std::min(min_s, s);
    }
    double m_sum = 0.0;
    for (const auto& [id, m] : outcome.final_frustration) m_sum += m;
    const std::size_t n = agents.size();
    const double mean_s = n ? sum / static_cast<double>(n) : 0.0;
    const double mean_m = n ? m_sum / static_cast<double>(n) : 0.0;

    std::string blocking;
    if (n <= kMaxOracleAgents)
      blocking = std::to_string(blocking_pairs(Matching{outcome.matching}, agents).size());

    out << request.parameter << "," << value_text << "," << outcome.matching.size() << ","
        << format_double(mean_s) << "," << format_double(min_s) << "," << format_double(mean_m)
        << "," << blocking << "\n";
  }
  return out.str();
}

}  // namespace barter
