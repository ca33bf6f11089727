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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "maqaoa/csv.h"
#include "maqaoa/harness.h"

using namespace maqaoa;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string &name) {
  auto p = fs::temp_directory_path() / ("maqaoa_harness_test_" + name);
  fs::remove_all(p);
  return p;
}

RunRecord rec(const std::string &strategy, const std::string &graph, int p,
              double ar, std::uint64_t ncum) {
  return {1, graph, strategy, p, ar, 10, ncum, ncum * p, "[0.1,0.2]"};
}

ExperimentConfig quick_config(std::vector<StrategyId> strategies, int p_max) {
  ExperimentConfig cfg;
  cfg.strategies = std::move(strategies);
  cfg.p_max = p_max;
  cfg.master_seed = 17;
  cfg.progression.quasi_newton.gradient_tol = 1e-6;
  return cfg;
}

} // namespace

TEST(Csv, QuotingAndParsing) {
  EXPECT_EQ(csv::quote("plain"), "plain");
  EXPECT_EQ(csv::quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  auto rows = csv::parse("a,\"b,c\",\"d\"\"e\"\r\n1,,3\r\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (csv::Row{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (csv::Row{"1", "", "3"}));
  EXPECT_THROW(csv::parse("\"open"), std::runtime_error);
  EXPECT_EQ(csv::format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(csv::format_real(16.0 / 17.0), "0.941176470588");
}

TEST(Csv, RecordRoundTrip) {
  std::vector<RunRecord> rs = {rec("constant", "graph_0000", 1, 0.75, 40),
                               rec("qaoa-relax", "graph_0001", 2, 0.875, 90)};
  auto path = scratch("records.csv");
  emit_csv(rs, path.string());
  auto text = slurp(path);
  EXPECT_EQ(text.substr(0, text.find("\r\n")),
            "set_id,graph_id,strategy,p,ar,n_c_level,n_c_cumulative,cost,angles");
  EXPECT_EQ(read_records(path.string()), rs);
  fs::remove(path);
}

TEST(Csv, EmptyAggregateIsHeaderOnly) {
  auto path = scratch("empty.csv");
  emit_csv(std::vector<AggregateRow>{}, path.string());
  EXPECT_EQ(slurp(path),
            "strategy,p,mean_ar,min_ar,mean_cost,max_cost,graphs_above_16_17\r\n");
  EXPECT_TRUE(read_aggregates(path.string()).empty());
  fs::remove(path);
}

TEST(Csv, AggregateRoundTrip) {
  std::vector<AggregateRow> rows = {{"constant", 3, 0.9, 0.85, 120.5, 200, 4},
                                    {"ma,odd", 1, 1.0, 1.0, 3, 3, 1}};
  auto path = scratch("agg.csv");
  emit_csv(rows, path.string());
  EXPECT_EQ(read_aggregates(path.string()), rows);
  fs::remove(path);
}

TEST(Csv, EmitFailsWithPathContext) {
  try {
    emit_csv(std::vector<RunRecord>{}, "/nonexistent-dir/x.csv");
    FAIL();
  } catch (const std::runtime_error &e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
  }
}

TEST(Aggregate, MeanMinAndThreshold) {
  std::vector<RunRecord> rs = {rec("a", "g0", 1, 0.9, 10), rec("a", "g1", 1, 0.95, 30),
                               rec("a", "g0", 2, 0.96, 20), rec("a", "g1", 2, 0.97, 50)};
  auto rows = aggregate(rs);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[0].mean_ar, 0.925);
  EXPECT_DOUBLE_EQ(rows[0].min_ar, 0.9);
  EXPECT_DOUBLE_EQ(rows[0].mean_cost, 20.0);
  EXPECT_DOUBLE_EQ(rows[0].max_cost, 30.0);
  EXPECT_EQ(rows[0].graphs_above_16_17, 1);
  EXPECT_EQ(rows[1].graphs_above_16_17, 2);
  // Pure fold: recomputing gives identical rows.
  EXPECT_EQ(aggregate(rs), rows);
}

TEST(Aggregate, SingleGraphAndPerfectRatios) {
  std::vector<RunRecord> rs = {rec("a", "g0", 1, 0.8, 10), rec("a", "g0", 2, 1.0, 20)};
  for (const auto &row : aggregate(rs))
    EXPECT_EQ(row.mean_ar, row.min_ar);
  std::vector<RunRecord> ones = {rec("b", "g0", 1, 1.0, 10), rec("b", "g1", 1, 1.0, 10)};
  auto row = aggregate(ones)[0];
  EXPECT_EQ(row.mean_ar, 1.0);
  EXPECT_EQ(row.min_ar, 1.0);
}

TEST(Aggregate, ByCostCarriesForward) {
  // g0 costs: 10, 40; g1 costs: 30, 100.
  std::vector<RunRecord> rs = {rec("a", "g0", 1, 0.5, 10), rec("a", "g0", 2, 0.7, 20),
                               rec("a", "g1", 1, 0.6, 30), rec("a", "g1", 2, 0.9, 50)};
  auto rows = aggregate_by_cost(rs);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].mean_cost, 30.0);
  EXPECT_DOUBLE_EQ(rows[0].mean_ar, 0.55);
  EXPECT_EQ(rows[1].mean_cost, 40.0);
  EXPECT_DOUBLE_EQ(rows[1].mean_ar, 0.65);
  EXPECT_DOUBLE_EQ(rows[1].min_ar, 0.6);
  EXPECT_EQ(rows[2].mean_cost, 100.0);
  EXPECT_DOUBLE_EQ(rows[2].mean_ar, 0.8);
  EXPECT_EQ(rows[2].p, 2);
}

TEST(DepthTable, Factors) {
  auto rows_for = [](const std::string &s, int converge_at, int p_max) {
    std::vector<AggregateRow> out;
    for (int p = 1; p <= p_max; ++p)
      out.push_back({s, p, 0.95, p >= converge_at ? 0.95 : 0.9, 0, 0, 0});
    return out;
  };
  auto t4 = depth_table(rows_for("constant", 8, 10), rows_for("qaoa-relax", 2, 10));
  ASSERT_EQ(t4.size(), 1u);
  EXPECT_EQ(*t4[0].layers_qaoa, 8);
  EXPECT_EQ(*t4[0].layers_ma, 2);
  EXPECT_DOUBLE_EQ(*t4[0].reduction_factor, 4.0);
  auto t7 = depth_table(rows_for("constant", 9, 10), rows_for("qaoa-relax", 5, 10));
  EXPECT_DOUBLE_EQ(*t7[0].reduction_factor, 1.8);
  auto eq = depth_table(rows_for("constant", 3, 5), rows_for("qaoa-relax", 3, 5));
  EXPECT_DOUBLE_EQ(*eq[0].reduction_factor, 1.0);
  auto un = depth_table(rows_for("constant", 12, 10), rows_for("qaoa-relax", 3, 10));
  EXPECT_FALSE(un[0].converged());
  EXPECT_FALSE(un[0].reduction_factor.has_value());
}

TEST(Experiment, CardinalityCostIdentityAndDeterminism) {
  auto ds = generate_dataset({5, 6, 0.6, 2, 4, 3});
  auto a = scratch("run_a.csv"), b = scratch("run_b.csv");
  auto cfg = quick_config({StrategyId::constant, StrategyId::qaoa_relax}, 3);
  cfg.out_path = a.string();
  auto res = run_experiment(ds, cfg);
  EXPECT_EQ(res.records.size(), 2u * 4u * 3u);
  for (const auto &r : res.records) {
    EXPECT_EQ(r.cost, r.n_c_cumulative * static_cast<std::uint64_t>(r.p));
    EXPECT_GE(r.ar, 0.0);
    EXPECT_LE(r.ar, 1.0);
    EXPECT_EQ(r.set_id, 5);
  }
  cfg.out_path = b.string();
  cfg.workers = 3;
  run_experiment(ds, cfg);
  EXPECT_EQ(slurp(a), slurp(b));
  // Reals are written at 12 significant digits.
  auto back = read_records(a.string());
  ASSERT_EQ(back.size(), res.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    auto x = back[i], y = res.records[i];
    EXPECT_NEAR(x.ar, y.ar, 1e-11);
    x.ar = y.ar;
    EXPECT_EQ(x, y);
  }

  // Every qaoa-relax record has a constant record at the same (graph, p).
  for (const auto &r : res.records)
    if (r.strategy == "qaoa-relax")
      EXPECT_TRUE(std::any_of(res.records.begin(), res.records.end(), [&](const RunRecord &c) {
        return c.strategy == "constant" && c.graph_id == r.graph_id && c.p == r.p;
      }));
  fs::remove(a);
  fs::remove(b);
}

TEST(Experiment, TruncatedResultsKeepParseablePrefix) {
  auto ds = generate_dataset({0, 5, 0.6, 2, 3, 4});
  auto path = scratch("trunc.csv");
  auto cfg = quick_config({StrategyId::constant}, 2);
  cfg.out_path = path.string();
  run_experiment(ds, cfg);
  auto text = slurp(path);
  std::size_t pos = 0;
  std::size_t boundaries = 0;
  while ((pos = text.find("\r\n", pos)) != std::string::npos) {
    pos += 2;
    auto prefix = parse_records(text.substr(0, pos));
    EXPECT_EQ(prefix.size(), boundaries);
    ++boundaries;
  }
  EXPECT_EQ(boundaries, 7u);
  fs::remove(path);
}

TEST(Experiment, QaoaRelaxRequiresConstant) {
  auto ds = generate_dataset({0, 5, 0.6, 2, 2, 4});
  EXPECT_THROW(run_experiment(ds, quick_config({StrategyId::qaoa_relax}, 2)),
               std::invalid_argument);
  // Constant listed after qaoa-relax still runs first.
  auto res = run_experiment(ds, quick_config({StrategyId::qaoa_relax, StrategyId::constant}, 2));
  EXPECT_EQ(res.records.front().strategy, "constant");
}

TEST(Experiment, StopAtTarget) {
  auto ds = generate_dataset({0, 5, 0.6, 2, 3, 4});
  auto cfg = quick_config({StrategyId::ma_constant}, 8);
  cfg.stop_at_target = true;
  auto res = run_experiment(ds, cfg);
  int last_p = 0;
  for (const auto &r : res.records)
    last_p = std::max(last_p, r.p);
  ASSERT_LT(last_p, 8);
  double min_last = 1.0;
  for (const auto &r : res.records)
    if (r.p == last_p)
      min_last = std::min(min_last, r.ar);
  EXPECT_GT(min_last, kTargetRatio);
}

TEST(Experiment, ConstantSweepLabels) {
  auto ds = generate_dataset({0, 5, 0.6, 2, 2, 4});
  auto res = sweep_constant(ds, {0.1, 0.2}, quick_config({}, 2));
  ASSERT_EQ(res.records.size(), 8u);
  EXPECT_EQ(res.records.front().strategy, "constant@0.1");
  EXPECT_EQ(res.records.back().strategy, "constant@0.2");
}

TEST(Workers, EnvironmentDefault) {
  setenv("MAQAOA_WORKERS", "3", 1);
  EXPECT_EQ(default_workers(), 3);
  unsetenv("MAQAOA_WORKERS");
  EXPECT_EQ(default_workers(), 1);
}

TEST(Workers, ParallelForVisitsAll) {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (int h : hits)
    EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 2, [](std::size_t i) {
                 if (i == 5)
                   throw std::runtime_error("boom");
               }),
               std::runtime_error);
}
