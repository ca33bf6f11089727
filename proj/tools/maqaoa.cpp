// Copyright 2026 The maqaoa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: dataset generation, experiment runs, aggregation
// and the layer-count table.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maqaoa/csv.h"
#include "maqaoa/dataset.h"
#include "maqaoa/harness.h"

using namespace maqaoa;

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::vector<StrategyId> parse_strategies(const std::string &list) {
  std::vector<StrategyId> out;
  for (const auto &tok : split(list, ','))
    out.push_back(strategy_from_token(tok));
  return out;
}

ConstantSign parse_sign(const std::string &s) {
  if (s == "gamma-positive")
    return ConstantSign::gamma_positive;
  if (s == "gamma-negative")
    return ConstantSign::gamma_negative;
  throw std::invalid_argument("constant sign must be gamma-positive or gamma-negative");
}

void print_depth_table(const std::vector<DepthRow> &rows) {
  std::printf("%-16s %-16s %12s %12s %10s\n", "qaoa", "ma", "layers_qaoa",
              "layers_ma", "factor");
  for (const auto &r : rows) {
    auto opt = [](const std::optional<int> &v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    std::string factor = "unconverged";
    if (r.reduction_factor) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.1f", *r.reduction_factor);
      factor = buf;
    }
    std::printf("%-16s %-16s %12s %12s %10s\n", r.qaoa_strategy.c_str(),
                r.ma_strategy.c_str(), opt(r.layers_qaoa).c_str(),
                opt(r.layers_ma).c_str(), factor.c_str());
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"QAOA / multi-angle QAOA MaxCut benchmark harness"};
  app.require_subcommand(1);

  // generate
  DatasetRequest req;
  std::string gen_out;
  auto *gen = app.add_subcommand("generate", "Generate a c-depth binned dataset");
  gen->add_option("--nodes", req.n, "Vertex count")->required()->check(CLI::Range(2, 16));
  gen->add_option("--prob", req.edge_prob, "Edge probability")->required();
  gen->add_option("--cdepth", req.target_c_depth, "Target covering depth")->required();
  gen->add_option("--count", req.count, "Number of graphs")->required();
  gen->add_option("--seed", req.rng_seed, "RNG seed")->required();
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--set-id", req.set_id, "Set identifier stored in the manifest");
  gen->add_option("--max-attempts", req.max_attempts, "Rejection-sampling cap");

  // run
  ExperimentConfig cfg;
  cfg.workers = default_workers();
  std::string run_strategies, run_budget = "one", constant_sign = "gamma-positive";
  auto *run = app.add_subcommand("run", "Run strategies over a dataset");
  run->add_option("--dataset", cfg.dataset_dir, "Dataset directory")->required();
  run->add_option("--strategies", run_strategies, "Comma-separated strategy tokens")
      ->required();
  run->add_option("--pmax", cfg.p_max, "Deepest level")->required();
  run->add_option("--budget", run_budget, "one | p")->default_val("one");
  run->add_option("--seed", cfg.master_seed, "Master seed")->default_val(0);
  run->add_option("--workers", cfg.workers, "Worker threads (default $MAQAOA_WORKERS)");
  run->add_option("--out", cfg.out_path, "Results CSV")->required();
  run->add_flag("--stop-at-target", cfg.stop_at_target,
                "Stop a strategy once every graph exceeds the target AR");
  run->add_option("--constant", cfg.progression.constant, "Constant initializer value");
  run->add_option("--constant-sign", constant_sign, "gamma-positive | gamma-negative");

  // aggregate
  std::string agg_in, agg_out, agg_by = "p";
  auto *agg = app.add_subcommand("aggregate", "Aggregate a results file");
  agg->add_option("--in", agg_in, "Results CSV")->required();
  agg->add_option("--out", agg_out, "Aggregate CSV")->required();
  agg->add_option("--by", agg_by, "p | cost")->check(CLI::IsMember({"p", "cost"}));

  // table
  std::string tab_qaoa, tab_ma, tab_out;
  double threshold = kTargetRatio;
  auto *tab = app.add_subcommand("table", "Layers needed to pass the worst-case target");
  tab->add_option("--qaoa", tab_qaoa, "Aggregate CSV of QAOA strategies")->required();
  tab->add_option("--ma", tab_ma, "Aggregate CSV of MA strategies")->required();
  tab->add_option("--threshold", threshold, "Worst-case AR target (default 16/17)");
  tab->add_option("--out", tab_out, "Optional CSV output");

  // sweep-constant
  ExperimentConfig sweep_cfg;
  sweep_cfg.workers = default_workers();
  std::string sweep_values = "0.01,0.05,0.1,0.2,0.4,1";
  auto *sweep = app.add_subcommand("sweep-constant", "Constant-initializer value sweep");
  sweep->add_option("--values", sweep_values, "Comma-separated constants");
  sweep->add_option("--dataset", sweep_cfg.dataset_dir, "Dataset directory")->required();
  sweep->add_option("--pmax", sweep_cfg.p_max, "Deepest level")->required();
  sweep->add_option("--seed", sweep_cfg.master_seed, "Master seed")->default_val(0);
  sweep->add_option("--workers", sweep_cfg.workers, "Worker threads (default $MAQAOA_WORKERS)");
  sweep->add_option("--out", sweep_cfg.out_path, "Results CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Dataset ds = generate_dataset(req);
      write_dataset(ds, gen_out);
      const auto &h = ds.manifest.diameter_histogram;
      std::printf("wrote %d graphs to %s (diameter c-1/c/c+1: %d/%d/%d)\n",
                  ds.manifest.count, gen_out.c_str(), h[0], h[1], h[2]);
      return 0;
    }
    if (*run) {
      cfg.strategies = parse_strategies(run_strategies);
      cfg.budget = budget_from_token(run_budget);
      cfg.progression.constant_sign = parse_sign(constant_sign);
      auto res = run_experiment(cfg);
      std::printf("wrote %zu records to %s\n", res.records.size(),
                  cfg.out_path.c_str());
      return 0;
    }
    if (*agg) {
      auto records = read_records(agg_in);
      if (records.empty())
        throw std::runtime_error("no records in " + agg_in);
      auto rows = agg_by == "cost" ? aggregate_by_cost(records) : aggregate(records);
      emit_csv(rows, agg_out);
      std::printf("wrote %zu rows to %s\n", rows.size(), agg_out.c_str());
      return 0;
    }
    if (*tab) {
      auto rows = depth_table(read_aggregates(tab_qaoa), read_aggregates(tab_ma),
                              threshold);
      print_depth_table(rows);
      if (!tab_out.empty())
        emit_csv(rows, tab_out);
      for (const auto &r : rows)
        if (!r.converged())
          return 2;
      return 0;
    }
    if (*sweep) {
      std::vector<double> values;
      for (const auto &tok : split(sweep_values, ','))
        values.push_back(csv::parse_real(tok));
      std::vector<std::string> skipped;
      Dataset ds = read_dataset(sweep_cfg.dataset_dir, &skipped);
      for (const auto &s : skipped)
        std::cerr << "warning: skipped unreadable graph " << s << '\n';
      auto res = sweep_constant(ds, values, sweep_cfg);
      std::printf("wrote %zu records to %s\n", res.records.size(),
                  sweep_cfg.out_path.c_str());
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
