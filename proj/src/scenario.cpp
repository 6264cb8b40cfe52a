// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "barter/scenario.hpp"

#include <cmath>
#include <set>
#include <string>

#include "barter/errors.hpp"
#include "barter/rng.hpp"

namespace barter {

namespace {

void check_model_params(double alpha, double beta, double gamma, const char* where) {
  if (!(alpha > 0.0))
    throw ValidationError(std::string(where) + ": alpha must be > 0");
  if (!(beta > 0.0 && beta < 1.0))
    throw ValidationError(std::string(where) + ": beta must lie strictly between 0 and 1");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw ValidationError(std::string(where) + ": gamma must lie strictly between 0 and 1");
}

StrategyKind greedy(std::optional<int> k = std::nullopt) {
  return StrategyKind{Policy::GreedyTopK, k};
}

}  // namespace

ScenarioSpec seesaw_uniform(int n, double weight, double alpha, double beta, double gamma) {
  if (n < 1) throw ValidationError("seesaw_uniform: n must be >= 1");
  check_model_params(alpha, beta, gamma, "seesaw_uniform");

  ScenarioSpec spec;
  spec.name = "seesaw-uniform-" + std::to_string(n);
  spec.dimension = 1;
  for (int i = 1; i <= n; ++i)
    spec.agents.push_back({i, {weight}, {weight}, alpha, beta, gamma});
  spec.engine = {0, n + 2, greedy()};

  ExpectedOutcome expected;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i + 1 <= n; i += 2) pairs.push_back({i, i + 1});
  expected.matching = pairs;
  if (n % 2 == 1) {
    expected.unmatched = std::vector<int>{n};
    expected.note = "identical agents pair off at full satisfaction; one odd agent is stranded";
  } else {
    expected.unmatched = std::vector<int>{};
    expected.note = "identical agents pair off at full satisfaction";
  }
  spec.expected = expected;
  return spec;
}

ScenarioSpec seesaw_line(const std::vector<double>& positions, double alpha, double beta,
                         double gamma) {
  if (positions.empty()) throw ValidationError("seesaw_line: need at least one position");
  check_model_params(alpha, beta, gamma, "seesaw_line");
  std::set<double> uniq(positions.begin(), positions.end());
  if (uniq.size() != positions.size())
    throw ValidationError("seesaw_line: positions must be distinct");

  ScenarioSpec spec;
  spec.name = "seesaw-line-" + std::to_string(positions.size());
  spec.dimension = 1;
  int id = 1;
  for (double p : positions) {
    spec.agents.push_back({id, {p}, {p}, alpha, beta, gamma});
    ++id;
  }
  spec.engine = {0, 8, greedy(2)};

  const bool canonical = positions == std::vector<double>{0.0, 7.0, 11.0, 18.0} &&
                         alpha == 0.04 && beta == 0.001 && gamma == 0.1;
  if (canonical) {
    ExpectedOutcome expected;
    expected.matching = std::vector<std::pair<int, int>>{{1, 4}, {2, 3}};
    expected.unmatched = std::vector<int>{};
    expected.note =
        "the close middle pair trades first; the outer agents wear their reservations "
        "down and then settle for each other far below beta";
    spec.expected = expected;
  }
  return spec;
}

ScenarioSpec cycling_ring(double alpha, double beta, double gamma) {
  check_model_params(alpha, beta, gamma, "cycling_ring");

  ScenarioSpec spec;
  spec.name = "cycling-ring";
  spec.dimension = 2;
  // Demands at the compass points; offers a quarter turn ahead, so agent i's
  // offer lands exactly on agent (i mod 4)+1's demand.
  spec.agents = {
      {1, {1.0, 0.0}, {0.0, 1.0}, alpha, beta, gamma},
      {2, {0.0, 1.0}, {-1.0, 0.0}, alpha, beta, gamma},
      {3, {-1.0, 0.0}, {0.0, -1.0}, alpha, beta, gamma},
      {4, {0.0, -1.0}, {1.0, 0.0}, alpha, beta, gamma},
  };
  spec.engine = {0, 8, greedy(2)};

  ExpectedOutcome expected;
  expected.matching = std::vector<std::pair<int, int>>{{1, 3}, {2, 4}};
  expected.unmatched = std::vector<int>{};
  expected.note =
      "with top-2 alluring, everyone is courted by their admirers' second choices and "
      "the opposite corners pair up at the middle satisfaction level exp(-2 alpha)";
  spec.expected = expected;
  return spec;
}

ScenarioSpec bipartite_case(BipartiteCase which, int n1, int n2, double alpha, double beta,
                            double gamma) {
  if (n1 < 1 || n2 < 1) throw ValidationError("bipartite_case: both sides need >= 1 agents");
  check_model_params(alpha, beta, gamma, "bipartite_case");

  ScenarioSpec spec;
  spec.dimension = 2;
  auto add = [&](int id, Point demand, Point offer) {
    spec.agents.push_back({id, std::move(demand), std::move(offer), alpha, beta, gamma});
  };

  switch (which) {
    case BipartiteCase::Match: {
      if (n1 != n2)
        throw ValidationError("bipartite_case: 'match' needs equal side sizes (got " +
                              std::to_string(n1) + " vs " + std::to_string(n2) + ")");
      spec.name = "bipartite-match";
      for (int i = 0; i < n1; ++i) add(1 + i, {2.0 * i, -5.0}, {2.0 * i, 5.0});
      for (int i = 0; i < n2; ++i) add(n1 + 1 + i, {2.0 * i, 5.0}, {2.0 * i, -5.0});
      ExpectedOutcome expected;
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n1; ++i) pairs.push_back({1 + i, n1 + 1 + i});
      expected.matching = pairs;
      expected.unmatched = std::vector<int>{};
      expected.note = "designated partners sit at distance zero; one round, full satisfaction";
      spec.expected = expected;
      break;
    }
    case BipartiteCase::Dismatch: {
      spec.name = "bipartite-dismatch";
      // Separate the demand and offer layers by more than ten reservation
      // radii so no allure can ever clear the frustration-free threshold.
      const double radius = std::sqrt(std::log(1.0 / beta) / alpha);
      const double gap = 10.0 * radius + 1.0;
      for (int i = 0; i < n1; ++i) add(1 + i, {2.0 * i, 0.0}, {2.0 * i, gap});
      for (int j = 0; j < n2; ++j) add(n1 + 1 + j, {2.0 * j, 2.0 * gap}, {2.0 * j, 3.0 * gap});
      ExpectedOutcome expected;
      expected.matching = std::vector<std::pair<int, int>>{};
      std::vector<int> all;
      for (int id = 1; id <= n1 + n2; ++id) all.push_back(id);
      expected.unmatched = all;
      expected.note = "nothing is acceptable to anyone; nobody allures and everyone keeps beta";
      spec.expected = expected;
      break;
    }
    case BipartiteCase::Popular: {
      spec.name = "bipartite-popular";
      // Agent 1's offer sits exactly on every side-2 demand; its rivals'
      // offers are far off, and the rivals' own demands are parked farther
      // still so they stay quiet instead of alluring forever.
      add(1, {0.0, 0.0}, {0.0, 10.0});
      for (int i = 1; i < n1; ++i) add(1 + i, {2.0 * i, -10.0}, {2.0 * i, 14.0});
      for (int j = 0; j < n2; ++j) add(n1 + 1 + j, {0.0, 10.0}, {2.0 * j, 0.0});
      ExpectedOutcome expected;
      expected.matching = std::vector<std::pair<int, int>>{{1, n1 + 1}};
      expected.note =
          "all of side 2 courts agent 1, which picks its own perfect partner, id " +
          std::to_string(n1 + 1);
      spec.expected = expected;
      break;
    }
    case BipartiteCase::Boredom: {
      spec.name = "bipartite-boredom";
      // Side-2 offers surround agent 1's demand at radius 1. For even n2 they
      // come in opposite axis-unit pairs, so the centroid equals the demand
      // and the candidate satisfactions tie bit-exactly; odd n2 falls back to
      // a regular polygon where the tie only holds to rounding.
      add(1, {0.0, 0.0}, {0.0, 5.0});
      for (int i = 1; i < n1; ++i) add(1 + i, {2.0 * i, -10.0}, {2.0 * i, 20.0});
      if (n2 % 2 == 0) {
        const Point units[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
        for (int j = 0; j < n2; ++j) add(n1 + 1 + j, {0.0, 5.0}, units[j % 4]);
      } else {
        const double tau = 8.0 * std::atan(1.0);  // 2*pi
        for (int j = 0; j < n2; ++j) {
          const double angle = tau * j / n2;
          add(n1 + 1 + j, {0.0, 5.0}, {std::cos(angle), std::sin(angle)});
        }
      }
      ExpectedOutcome expected;
      if (n2 % 2 == 0) {
        expected.matching = std::vector<std::pair<int, int>>{{1, n1 + 1}};
        expected.note = "agent 1 is exactly indifferent; the id tie-break picks " +
                        std::to_string(n1 + 1);
      } else {
        expected.note = "agent 1 is indifferent up to rounding; the partner is whichever "
                        "candidate rounds highest";
      }
      spec.expected = expected;
      break;
    }
  }
  spec.engine = {0, 8, greedy()};
  return spec;
}

ScenarioSpec random_population(int n, std::size_t d, std::uint64_t seed,
                               const ParamRanges& ranges) {
  if (n < 0) throw ValidationError("random_population: n must be >= 0");
  if (d < 1) throw ValidationError("random_population: dimension must be >= 1");
  auto check_range = [](std::pair<double, double> r, const char* name) {
    if (!(r.first <= r.second))
      throw ValidationError(std::string("random_population: ") + name + " range is inverted");
  };
  check_range(ranges.coordinate, "coordinate");
  check_range(ranges.alpha, "alpha");
  check_range(ranges.beta, "beta");
  check_range(ranges.gamma, "gamma");
  if (!(ranges.alpha.first > 0.0))
    throw ValidationError("random_population: alpha range must stay > 0");
  if (!(ranges.beta.first > 0.0 && ranges.beta.second < 1.0))
    throw ValidationError("random_population: beta range must stay inside (0,1)");
  if (!(ranges.gamma.first > 0.0 && ranges.gamma.second < 1.0))
    throw ValidationError("random_population: gamma range must stay inside (0,1)");

  ScenarioSpec spec;
  spec.name = "random-" + std::to_string(n) + "-seed" + std::to_string(seed);
  spec.dimension = d;
  SubStream rng(derive_seed(seed, 0x5ce9a6));
  for (int i = 1; i <= n; ++i) {
    Agent a;
    a.id = i;
    for (std::size_t k = 0; k < d; ++k)
      a.demand.push_back(rng.uniform_in(ranges.coordinate.first, ranges.coordinate.second));
    for (std::size_t k = 0; k < d; ++k)
      a.offer.push_back(rng.uniform_in(ranges.coordinate.first, ranges.coordinate.second));
    a.alpha = rng.uniform_in(ranges.alpha.first, ranges.alpha.second);
    a.beta = rng.uniform_in(ranges.beta.first, ranges.beta.second);
    a.gamma = rng.uniform_in(ranges.gamma.first, ranges.gamma.second);
    spec.agents.push_back(std::move(a));
  }
  spec.engine = {seed, 4 * std::max(n, 1), StrategyKind{Policy::GreedyTopK, std::nullopt}};
  return spec;
}

}  // namespace barter
