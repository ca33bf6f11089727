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

#include "maqaoa/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "maqaoa/csv.h"

namespace maqaoa {

RunRecord make_run_record(int set_id, const std::string &graph_id,
                          const std::string &strategy, const LevelResult &lvl) {
  RunRecord r;
  r.set_id = set_id;
  r.graph_id = graph_id;
  r.strategy = strategy;
  r.p = lvl.p;
  r.ar = lvl.ar;
  r.n_c_level = lvl.n_c_level;
  r.n_c_cumulative = lvl.n_c_cumulative;
  r.cost = lvl.n_c_cumulative * static_cast<std::uint64_t>(lvl.p);
  r.angles = lvl.angles.to_json();
  return r;
}

const std::vector<std::string> &run_record_header() {
  static const std::vector<std::string> h = {
      "set_id", "graph_id",       "strategy", "p",     "ar",
      "n_c_level", "n_c_cumulative", "cost", "angles"};
  return h;
}

const std::vector<std::string> &aggregate_header() {
  static const std::vector<std::string> h = {
      "strategy", "p",        "mean_ar", "min_ar",
      "mean_cost", "max_cost", "graphs_above_16_17"};
  return h;
}

const std::vector<std::string> &depth_header() {
  static const std::vector<std::string> h = {"qaoa_strategy", "ma_strategy",
                                             "layers_qaoa", "layers_ma",
                                             "reduction_factor"};
  return h;
}

std::string format_record(const RunRecord &r) {
  return csv::format_row({std::to_string(r.set_id), r.graph_id, r.strategy,
                          std::to_string(r.p), csv::format_real(r.ar),
                          std::to_string(r.n_c_level),
                          std::to_string(r.n_c_cumulative),
                          std::to_string(r.cost), r.angles});
}

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<csv::Row> body_rows(const std::string &text,
                                const std::vector<std::string> &header,
                                const char *what) {
  auto rows = csv::parse(text);
  if (rows.empty() || rows.front() != header)
    throw std::runtime_error(std::string(what) + ": missing or unexpected header");
  rows.erase(rows.begin());
  for (const auto &row : rows)
    if (row.size() != header.size())
      throw std::runtime_error(std::string(what) + ": row has " +
                               std::to_string(row.size()) + " fields, expected " +
                               std::to_string(header.size()));
  return rows;
}

template <typename Rows, typename Fmt>
void write_file(const std::string &path, const std::vector<std::string> &header,
                const Rows &rows, Fmt fmt) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << csv::format_row(header);
  for (const auto &r : rows)
    out << fmt(r);
  out.flush();
  if (!out)
    throw std::runtime_error("write failed: " + path);
}

std::string format_aggregate(const AggregateRow &a) {
  return csv::format_row({a.strategy, std::to_string(a.p),
                          csv::format_real(a.mean_ar), csv::format_real(a.min_ar),
                          csv::format_real(a.mean_cost),
                          csv::format_real(a.max_cost),
                          std::to_string(a.graphs_above_16_17)});
}

std::string format_depth(const DepthRow &d) {
  auto opt = [](const std::optional<int> &v) {
    return v ? std::to_string(*v) : std::string("unconverged");
  };
  std::string factor = "unconverged";
  if (d.reduction_factor) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", *d.reduction_factor);
    factor = buf;
  }
  return csv::format_row(
      {d.qaoa_strategy, d.ma_strategy, opt(d.layers_qaoa), opt(d.layers_ma), factor});
}

} // namespace

std::vector<RunRecord> parse_records(const std::string &csv_text) {
  std::vector<RunRecord> out;
  for (const auto &row : body_rows(csv_text, run_record_header(), "results"))
    out.push_back({static_cast<int>(csv::parse_int(row[0])), row[1], row[2],
                   static_cast<int>(csv::parse_int(row[3])),
                   csv::parse_real(row[4]),
                   static_cast<std::uint64_t>(csv::parse_int(row[5])),
                   static_cast<std::uint64_t>(csv::parse_int(row[6])),
                   static_cast<std::uint64_t>(csv::parse_int(row[7])), row[8]});
  return out;
}

std::vector<RunRecord> read_records(const std::string &path) {
  return parse_records(slurp(path));
}

void emit_csv(const std::vector<RunRecord> &records, const std::string &path) {
  write_file(path, run_record_header(), records, format_record);
}

void emit_csv(const std::vector<AggregateRow> &rows, const std::string &path) {
  write_file(path, aggregate_header(), rows, format_aggregate);
}

void emit_csv(const std::vector<DepthRow> &rows, const std::string &path) {
  write_file(path, depth_header(), rows, format_depth);
}

std::vector<AggregateRow> parse_aggregates(const std::string &csv_text) {
  std::vector<AggregateRow> out;
  for (const auto &row : body_rows(csv_text, aggregate_header(), "aggregate"))
    out.push_back({row[0], static_cast<int>(csv::parse_int(row[1])),
                   csv::parse_real(row[2]), csv::parse_real(row[3]),
                   csv::parse_real(row[4]), csv::parse_real(row[5]),
                   static_cast<int>(csv::parse_int(row[6]))});
  return out;
}

std::vector<AggregateRow> read_aggregates(const std::string &path) {
  return parse_aggregates(slurp(path));
}

namespace {

std::vector<std::string> strategy_order(const std::vector<RunRecord> &records) {
  std::vector<std::string> order;
  for (const auto &r : records)
    if (std::find(order.begin(), order.end(), r.strategy) == order.end())
      order.push_back(r.strategy);
  return order;
}

} // namespace

std::vector<AggregateRow> aggregate(const std::vector<RunRecord> &records,
                                    double threshold) {
  std::vector<AggregateRow> out;
  for (const auto &strategy : strategy_order(records)) {
    std::map<int, std::vector<const RunRecord *>> by_p;
    for (const auto &r : records)
      if (r.strategy == strategy)
        by_p[r.p].push_back(&r);
    for (const auto &[p, rs] : by_p) {
      AggregateRow row;
      row.strategy = strategy;
      row.p = p;
      row.min_ar = rs.front()->ar;
      double ar_sum = 0.0, cost_sum = 0.0;
      for (const auto *r : rs) {
        ar_sum += r->ar;
        cost_sum += static_cast<double>(r->cost);
        row.min_ar = std::min(row.min_ar, r->ar);
        row.max_cost = std::max(row.max_cost, static_cast<double>(r->cost));
        if (r->ar > threshold)
          ++row.graphs_above_16_17;
      }
      row.mean_ar = ar_sum / rs.size();
      row.mean_cost = cost_sum / rs.size();
      out.push_back(row);
    }
  }
  return out;
}

std::vector<AggregateRow> aggregate_by_cost(const std::vector<RunRecord> &records,
                                            double threshold) {
  std::vector<AggregateRow> out;
  for (const auto &strategy : strategy_order(records)) {
    std::map<std::string, std::vector<const RunRecord *>> traj;
    for (const auto &r : records)
      if (r.strategy == strategy)
        traj[r.graph_id].push_back(&r);
    std::vector<std::uint64_t> points;
    std::uint64_t start = 0;
    for (auto &[id, rs] : traj) {
      std::sort(rs.begin(), rs.end(), [](const RunRecord *a, const RunRecord *b) {
        return a->cost < b->cost;
      });
      start = std::max(start, rs.front()->cost);
      for (const auto *r : rs)
        points.push_back(r->cost);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (auto c : points) {
      if (c < start)
        continue;
      AggregateRow row;
      row.strategy = strategy;
      row.mean_cost = row.max_cost = static_cast<double>(c);
      row.min_ar = 1.0;
      double sum = 0.0;
      for (const auto &[id, rs] : traj) {
        const RunRecord *cur = nullptr;
        for (const auto *r : rs)
          if (r->cost <= c)
            cur = r;
        sum += cur->ar;
        row.min_ar = std::min(row.min_ar, cur->ar);
        row.p = std::max(row.p, cur->p);
        if (cur->ar > threshold)
          ++row.graphs_above_16_17;
      }
      row.mean_ar = sum / traj.size();
      out.push_back(row);
    }
  }
  return out;
}

std::vector<DepthRow> depth_table(const std::vector<AggregateRow> &qaoa_rows,
                                  const std::vector<AggregateRow> &ma_rows,
                                  double threshold) {
  auto first_converged = [&](const std::vector<AggregateRow> &rows,
                             const std::string &strategy) -> std::optional<int> {
    std::optional<int> best;
    for (const auto &r : rows)
      if (r.strategy == strategy && r.min_ar > threshold &&
          (!best || r.p < *best))
        best = r.p;
    return best;
  };
  auto names = [](const std::vector<AggregateRow> &rows) {
    std::vector<std::string> out;
    for (const auto &r : rows)
      if (std::find(out.begin(), out.end(), r.strategy) == out.end())
        out.push_back(r.strategy);
    return out;
  };
  std::vector<DepthRow> out;
  for (const auto &q : names(qaoa_rows))
    for (const auto &m : names(ma_rows)) {
      DepthRow row{q, m, first_converged(qaoa_rows, q),
                   first_converged(ma_rows, m), std::nullopt};
      if (row.converged())
        row.reduction_factor =
            std::round(10.0 * *row.layers_qaoa / *row.layers_ma) / 10.0;
      out.push_back(row);
    }
  return out;
}

int default_workers() {
  if (const char *env = std::getenv("MAQAOA_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0)
      return w;
  }
  return 1;
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)> &fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

ExperimentResult run_experiment(const ExperimentConfig &config) {
  ExperimentResult res;
  Dataset ds = read_dataset(config.dataset_dir, &res.skipped);
  for (const auto &s : res.skipped)
    std::cerr << "warning: skipped unreadable graph " << s << '\n';
  auto out = run_experiment(ds, config);
  out.skipped = std::move(res.skipped);
  return out;
}

ExperimentResult run_experiment(const Dataset &dataset,
                                const ExperimentConfig &config) {
  if (config.strategies.empty())
    throw std::invalid_argument("no strategies requested");
  if (config.p_max < 1)
    throw std::invalid_argument("p_max must be at least 1");

  auto has = [&](StrategyId id) {
    return std::find(config.strategies.begin(), config.strategies.end(), id) !=
           config.strategies.end();
  };
  std::vector<StrategyId> order = config.strategies;
  if (has(StrategyId::qaoa_relax)) {
    if (!has(StrategyId::constant))
      throw std::invalid_argument(
          "qaoa-relax needs the constant QAOA strategy in the same run");
    // Constant must finish before qaoa-relax reads its optima.
    std::stable_partition(order.begin(), order.end(),
                          [](StrategyId s) { return s == StrategyId::constant; });
  }

  std::ofstream out;
  if (!config.out_path.empty()) {
    out.open(config.out_path, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + config.out_path);
    out << csv::format_row(run_record_header());
    out.flush();
  }

  const auto &graphs = dataset.graphs;
  const std::size_t ng = graphs.size();
  std::vector<std::vector<AngleSet>> constant_optima(ng);
  ExperimentResult result;

  for (StrategyId strategy : order) {
    const std::string label =
        config.label ? config.label(strategy) : std::string(to_token(strategy));
    std::vector<std::unique_ptr<LayerProgression>> progs(ng);
    for (std::size_t g = 0; g < ng; ++g) {
      std::vector<AngleSet> reference;
      if (strategy == StrategyId::qaoa_relax)
        reference = constant_optima[g];
      progs[g] = std::make_unique<LayerProgression>(
          graphs[g], strategy, config.budget,
          derive_seed(config.master_seed, graphs[g].id), config.progression,
          std::move(reference));
    }
    for (int p = 1; p <= config.p_max; ++p) {
      parallel_for(ng, config.workers, [&](std::size_t g) { progs[g]->step(); });
      std::string batch;
      bool all_above = ng > 0;
      for (std::size_t g = 0; g < ng; ++g) {
        const auto &lvl = progs[g]->state().last();
        auto rec = make_run_record(dataset.manifest.set_id, graphs[g].id, label, lvl);
        batch += format_record(rec);
        result.records.push_back(std::move(rec));
        all_above = all_above && lvl.ar > config.progression.target;
      }
      if (out.is_open()) {
        out << batch;
        out.flush();
        if (!out)
          throw std::runtime_error("write failed: " + config.out_path);
      }
      if (config.stop_at_target && all_above)
        break;
    }
    if (strategy == StrategyId::constant)
      for (std::size_t g = 0; g < ng; ++g)
        for (const auto &lvl : progs[g]->state().levels)
          constant_optima[g].push_back(lvl.angles);
  }
  return result;
}

ExperimentResult sweep_constant(const Dataset &dataset,
                                const std::vector<double> &values,
                                ExperimentConfig config) {
  ExperimentResult all;
  const std::string out_path = config.out_path;
  config.strategies = {StrategyId::constant};
  config.out_path.clear();
  for (double c : values) {
    config.progression.constant = c;
    const std::string label = "constant@" + csv::format_real(c);
    config.label = [label](StrategyId) { return label; };
    auto part = run_experiment(dataset, config);
    all.records.insert(all.records.end(), part.records.begin(),
                       part.records.end());
  }
  if (!out_path.empty())
    emit_csv(all.records, out_path);
  return all;
}

} // namespace maqaoa
