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

/**
 * @file
 * Experiment orchestration: progressions over a dataset, results files,
 * aggregation and the layer-count table.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maqaoa/dataset.h"
#include "maqaoa/strategies.h"

namespace maqaoa {

struct RunRecord {
  int set_id = 0;
  std::string graph_id;
  std::string strategy;
  int p = 0;
  double ar = 0.0;
  std::uint64_t n_c_level = 0;
  std::uint64_t n_c_cumulative = 0;
  std::uint64_t cost = 0; ///< n_c_cumulative * p
  std::string angles;     ///< flat JSON array

  bool operator==(const RunRecord &) const = default;
};

struct AggregateRow {
  std::string strategy;
  int p = 0;
  double mean_ar = 0.0;
  double min_ar = 0.0;
  double mean_cost = 0.0;
  double max_cost = 0.0;
  int graphs_above_16_17 = 0;

  bool operator==(const AggregateRow &) const = default;
};

struct DepthRow {
  std::string qaoa_strategy;
  std::string ma_strategy;
  std::optional<int> layers_qaoa;
  std::optional<int> layers_ma;
  std::optional<double> reduction_factor; ///< one decimal

  bool converged() const { return layers_qaoa && layers_ma; }
};

RunRecord make_run_record(int set_id, const std::string &graph_id,
                          const std::string &strategy, const LevelResult &lvl);

const std::vector<std::string> &run_record_header();
const std::vector<std::string> &aggregate_header();
const std::vector<std::string> &depth_header();

std::string format_record(const RunRecord &r);
std::vector<RunRecord> parse_records(const std::string &csv_text);
std::vector<RunRecord> read_records(const std::string &path);

/// Header plus rows; either list may be empty.
void emit_csv(const std::vector<RunRecord> &records, const std::string &path);
void emit_csv(const std::vector<AggregateRow> &rows, const std::string &path);
void emit_csv(const std::vector<DepthRow> &rows, const std::string &path);
std::vector<AggregateRow> parse_aggregates(const std::string &csv_text);
std::vector<AggregateRow> read_aggregates(const std::string &path);

/// Mean/min AR and cost per (strategy, p). Strategies keep first-seen order.
std::vector<AggregateRow> aggregate(const std::vector<RunRecord> &records,
                                    double threshold = kTargetRatio);

/// AR against cumulative cost. Each graph's trajectory is a step function
/// carried forward between its own cost points; rows are emitted at every
/// realized cost point from the first one at which every graph has a value.
/// mean_cost and max_cost both hold the cost point; p is the largest level
/// carried at that point.
std::vector<AggregateRow> aggregate_by_cost(const std::vector<RunRecord> &records,
                                            double threshold = kTargetRatio);

/// Smallest p with worst-case AR above `threshold` for every pairing of a
/// QAOA strategy with an MA strategy.
std::vector<DepthRow> depth_table(const std::vector<AggregateRow> &qaoa_rows,
                                  const std::vector<AggregateRow> &ma_rows,
                                  double threshold = kTargetRatio);

struct ExperimentConfig {
  std::string dataset_dir;
  std::vector<StrategyId> strategies;
  int p_max = 10;
  BudgetRule budget = BudgetRule::one;
  std::uint64_t master_seed = 0;
  int workers = 1;
  std::string out_path;
  /// Stop a strategy once every graph exceeds config.progression.target.
  bool stop_at_target = false;
  ProgressionConfig progression;
  /// Overrides the strategy column (used by the constant sweep).
  std::function<std::string(StrategyId)> label;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<std::string> skipped;
};

/// Runs every strategy over every graph, streaming records to
/// config.out_path (when non-empty) one level at a time.
ExperimentResult run_experiment(const ExperimentConfig &config);
ExperimentResult run_experiment(const Dataset &dataset,
                                const ExperimentConfig &config);

/// Constant-strategy runs for each value; strategy column "constant@<c>".
ExperimentResult sweep_constant(const Dataset &dataset,
                                const std::vector<double> &values,
                                ExperimentConfig config);

/// Workers from MAQAOA_WORKERS, else 1.
int default_workers();

/// Calls fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)> &fn);

} // namespace maqaoa
