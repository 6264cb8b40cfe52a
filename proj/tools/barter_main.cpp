// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "barter/engine.hpp"
#include "barter/errors.hpp"
#include "barter/oracle.hpp"
#include "barter/result_io.hpp"
#include "barter/scenario.hpp"
#include "barter/scenario_io.hpp"
#include "barter/svg.hpp"
#include "barter/sweep.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw barter::ValidationError("cannot write \"" + path + "\"");
  out << content;
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path)
    write_file(*out_path, content);
  else
    std::cout << content;
}

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> max_rounds;
  std::optional<int> k;
};

barter::EngineConfig apply(const barter::EngineConfig& base, const RunOverrides& ov) {
  barter::EngineConfig config = base;
  if (ov.seed) config.seed = *ov.seed;
  if (ov.max_rounds) config.max_rounds = *ov.max_rounds;
  if (ov.k) config.default_strategy = {barter::Policy::GreedyTopK, *ov.k};
  return config;
}

void add_run_overrides(CLI::App* cmd, RunOverrides& ov) {
  cmd->add_option("--seed", ov.seed, "Override the engine seed");
  cmd->add_option("--max-rounds", ov.max_rounds, "Override the round limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--k", ov.k,
                  "Force the greedy_top_k strategy with this allure cap")
      ->check(CLI::PositiveNumber);
}

int run_app(int argc, char** argv) {
  CLI::App app{"barter: a deterministic simulator for bilateral barter auctions\n"
               "(agents allure, accept and confirm trades over vector demands and offers)"};
  app.require_subcommand(1);

  // ---- run ----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run a scenario and report the outcome");
  std::string run_path;
  RunOverrides run_ov;
  std::optional<std::string> run_out;
  std::string run_format = "json";
  run->add_option("scenario", run_path, "Scenario JSON file")->required();
  add_run_overrides(run, run_ov);
  run->add_option("--out", run_out, "Write the result document to this file");
  run->add_option("--format", run_format, "Result document format")
      ->check(CLI::IsMember({"json", "csv"}));
  run->callback([&] {
    const auto spec = barter::load_scenario(run_path);
    const auto config = apply(spec.engine, run_ov);
    const auto outcome = barter::run_to_completion(spec.agents, config);
    std::cout << barter::human_summary(spec, outcome);
    if (run_out) {
      if (run_format == "json")
        write_file(*run_out, barter::result_to_json(spec, config, outcome).dump(2) + "\n");
      else
        write_file(*run_out, barter::result_to_csv(spec, outcome));
    }
  });

  // ---- oracle -------------------------------------------------------------
  auto* oracle = app.add_subcommand(
      "oracle", "Compare a run against the exhaustive welfare optimum");
  std::string oracle_path;
  RunOverrides oracle_ov;
  std::string objective = "utilitarian_sum";
  std::optional<std::string> oracle_out;
  oracle->add_option("scenario", oracle_path, "Scenario JSON file")->required();
  add_run_overrides(oracle, oracle_ov);
  oracle->add_option("--objective", objective,
                     "utilitarian_sum (total) or egalitarian_min (worst-off)");
  oracle->add_option("--out", oracle_out, "Write the full report to this file");
  oracle->callback([&] {
    const auto spec = barter::load_scenario(oracle_path);
    const auto obj = barter::objective_from_name(objective);
    const auto config = apply(spec.engine, oracle_ov);
    const auto outcome = barter::run_to_completion(spec.agents, config);
    const auto report = barter::oracle_report(spec, config, outcome, obj);
    std::cout << barter::human_summary(spec, outcome);
    const auto& cmp = report["comparison"];
    std::cout << "  objective " << report["objective"].get<std::string>() << ": engine "
              << (obj == barter::Objective::UtilitarianSum
                      ? report["engine"]["result"]["total"].get<double>()
                      : report["engine"]["result"]["minimum"].get<double>())
              << ", optimum "
              << (obj == barter::Objective::UtilitarianSum
                      ? report["oracle"]["total"].get<double>()
                      : report["oracle"]["minimum"].get<double>())
              << ", gap " << cmp["welfare_gap"].get<double>() << "\n"
              << "  blocking pairs: " << cmp["blocking_pair_count"].get<std::size_t>()
              << ", individually rational (frustration-free): "
              << (cmp["individually_rational"].get<bool>() ? "yes" : "no") << "\n";
    if (oracle_out) write_file(*oracle_out, report.dump(2) + "\n");
  });

  // ---- sweep --------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Grid-sweep one parameter, one run per point");
  std::string sweep_path;
  barter::SweepRequest request;
  std::optional<std::string> sweep_out;
  sweep->add_option("scenario", sweep_path, "Scenario JSON file")->required();
  sweep->add_option("--param", request.parameter, "alpha, beta, gamma or k")->required();
  sweep->add_option("--from", request.from, "First grid value")->required();
  sweep->add_option("--to", request.to, "Last grid value")->required();
  sweep->add_option("--steps", request.steps, "Grid points (>= 2)")->required();
  sweep->add_option("--out", sweep_out, "Write CSV to this file (default: stdout)");
  sweep->callback([&] {
    const auto spec = barter::load_scenario(sweep_path);
    emit(sweep_out, barter::sweep_csv(spec, request));
  });

  // ---- render -------------------------------------------------------------
  auto* render = app.add_subcommand("render", "Draw the scenario geometry as SVG");
  std::string render_path;
  std::string render_out;
  bool render_run = false;
  RunOverrides render_ov;
  render->add_option("scenario", render_path, "Scenario JSON file")->required();
  render->add_option("--out", render_out, "Output SVG file")->required();
  render->add_flag("--with-run", render_run, "Run the engine and overlay the matching");
  add_run_overrides(render, render_ov);
  render->callback([&] {
    const auto spec = barter::load_scenario(render_path);
    if (render_run) {
      const auto outcome =
          barter::run_to_completion(spec.agents, apply(spec.engine, render_ov));
      write_file(render_out, barter::geometry_svg(spec, &outcome));
    } else {
      write_file(render_out, barter::geometry_svg(spec));
    }
  });

  // ---- export-scenario ----------------------------------------------------
  auto* exp = app.add_subcommand("export-scenario", "Write a built-in scenario to a file");
  std::string which;
  std::string exp_out;
  int opt_n = 4;
  double opt_weight = 5.0;
  std::vector<double> opt_positions{0.0, 7.0, 11.0, 18.0};
  int side1 = 3, side2 = 3;
  std::size_t opt_d = 2;
  std::uint64_t gen_seed = 0;
  std::optional<double> opt_alpha, opt_beta, opt_gamma;
  exp->add_option("name", which,
                  "seesaw-uniform | seesaw-line | cycling-ring | bipartite-match | "
                  "bipartite-dismatch | bipartite-popular | bipartite-boredom | random")
      ->required();
  exp->add_option("--out", exp_out, "Output scenario file")->required();
  exp->add_option("--n", opt_n, "Population size (seesaw-uniform, random)");
  exp->add_option("--weight", opt_weight, "Shared axis position (seesaw-uniform)");
  exp->add_option("--positions", opt_positions, "Axis positions (seesaw-line)")
      ->delimiter(',');
  exp->add_option("--side1", side1, "First side size (bipartite-*)");
  exp->add_option("--side2", side2, "Second side size (bipartite-*)");
  exp->add_option("--d", opt_d, "Space dimension (random)");
  exp->add_option("--gen-seed", gen_seed, "Generation seed (random)");
  exp->add_option("--alpha", opt_alpha, "Sensitivity, > 0");
  exp->add_option("--beta", opt_beta, "Default satisfaction, in (0,1)");
  exp->add_option("--gamma", opt_gamma, "Frustration factor, in (0,1)");
  exp->callback([&] {
    using barter::BipartiteCase;
    barter::ScenarioSpec spec;
    auto a = [&](double dflt) { return opt_alpha.value_or(dflt); };
    auto b = [&](double dflt) { return opt_beta.value_or(dflt); };
    auto g = [&](double dflt) { return opt_gamma.value_or(dflt); };
    if (which == "seesaw-uniform")
      spec = barter::seesaw_uniform(opt_n, opt_weight, a(0.04), b(0.1), g(0.5));
    else if (which == "seesaw-line")
      spec = barter::seesaw_line(opt_positions, a(0.04), b(0.001), g(0.1));
    else if (which == "cycling-ring")
      spec = barter::cycling_ring(a(1.0), b(0.01), g(0.5));
    else if (which == "bipartite-match")
      spec = barter::bipartite_case(BipartiteCase::Match, side1, side2, a(1.0), b(0.1), g(0.5));
    else if (which == "bipartite-dismatch")
      spec = barter::bipartite_case(BipartiteCase::Dismatch, side1, side2, a(1.0), b(0.1), g(0.5));
    else if (which == "bipartite-popular")
      spec = barter::bipartite_case(BipartiteCase::Popular, side1, side2, a(1.0), b(0.1), g(0.5));
    else if (which == "bipartite-boredom")
      spec = barter::bipartite_case(BipartiteCase::Boredom, side1, side2, a(0.5), b(0.1), g(0.5));
    else if (which == "random") {
      barter::ParamRanges ranges;
      if (opt_alpha) ranges.alpha = {*opt_alpha, *opt_alpha};
      if (opt_beta) ranges.beta = {*opt_beta, *opt_beta};
      if (opt_gamma) ranges.gamma = {*opt_gamma, *opt_gamma};
      spec = barter::random_population(opt_n, opt_d, gen_seed, ranges);
    } else {
      throw barter::ValidationError("export-scenario: unknown scenario \"" + which + "\"");
    }
    barter::save_scenario(spec, exp_out);
    std::cout << "wrote " << spec.name << " (" << spec.agents.size() << " agents) to "
              << exp_out << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const barter::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const barter::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
