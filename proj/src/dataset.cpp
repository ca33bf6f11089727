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

#include "maqaoa/dataset.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace maqaoa {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

DatasetExhausted::DatasetExhausted(int collected, std::uint64_t attempts)
    : std::runtime_error("dataset attempt cap exhausted after " +
                         std::to_string(attempts) + " attempts with " +
                         std::to_string(collected) + " graphs collected"),
      collected(collected) {}

std::string graph_file_name(int idx) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "graph_%04d.txt", idx);
  return buf;
}

Dataset generate_dataset(const DatasetRequest &req) {
  if (req.count < 0)
    throw std::invalid_argument("dataset count must be non-negative");
  std::mt19937_64 rng(req.rng_seed);
  Dataset ds;
  ds.manifest = {req.set_id, req.n, req.edge_prob, req.target_c_depth,
                 0,          req.rng_seed, {}};
  std::unordered_set<std::string> seen;
  std::uint64_t attempts = 0;
  while (static_cast<int>(ds.graphs.size()) < req.count) {
    if (attempts >= req.max_attempts)
      throw DatasetExhausted(static_cast<int>(ds.graphs.size()), attempts);
    ++attempts;
    Graph g = erdos_renyi(req.n, req.edge_prob, rng);
    if (g.num_edges() == 0 || !is_connected(g))
      continue;
    if (covering_depth(g) != req.target_c_depth)
      continue;
    if (!seen.insert(canonical_key(g)).second)
      continue;
    int idx = static_cast<int>(ds.graphs.size());
    auto name = graph_file_name(idx);
    ds.graphs.push_back(make_record(std::move(g), name.substr(0, name.size() - 4)));
  }
  ds.manifest.count = static_cast<int>(ds.graphs.size());
  for (const auto &rec : ds.graphs) {
    int slot = rec.diameter - (rec.c_depth - 1);
    if (slot >= 0 && slot < 3)
      ++ds.manifest.diameter_histogram[slot];
  }
  return ds;
}

std::string manifest_to_json(const DatasetManifest &m) {
  ordered_json j;
  j["set_id"] = m.set_id;
  j["n"] = m.n;
  j["edge_prob"] = m.edge_prob;
  j["target_c_depth"] = m.target_c_depth;
  j["count"] = m.count;
  j["rng_seed"] = m.rng_seed;
  j["diameter_histogram"] = m.diameter_histogram;
  return j.dump(2) + "\n";
}

DatasetManifest manifest_from_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  DatasetManifest m;
  m.set_id = j.at("set_id").get<int>();
  m.n = j.at("n").get<int>();
  m.edge_prob = j.at("edge_prob").get<double>();
  m.target_c_depth = j.at("target_c_depth").get<int>();
  m.count = j.at("count").get<int>();
  m.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  m.diameter_histogram = j.at("diameter_histogram").get<std::array<int, 3>>();
  return m;
}

namespace {

void write_text(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out)
    throw std::runtime_error("write failed: " + path.string());
}

} // namespace

void write_dataset(const Dataset &ds, const std::string &dir) {
  fs::create_directories(dir);
  write_text(fs::path(dir) / "manifest.json", manifest_to_json(ds.manifest));
  for (std::size_t i = 0; i < ds.graphs.size(); ++i)
    write_text(fs::path(dir) / graph_file_name(static_cast<int>(i)),
               format_graph_file(ds.graphs[i]));
}

Dataset read_dataset(const std::string &dir, std::vector<std::string> *skipped) {
  fs::path manifest_path = fs::path(dir) / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in)
    throw std::runtime_error("cannot read " + manifest_path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  Dataset ds;
  ds.manifest = manifest_from_json(ss.str());
  for (int i = 0; i < ds.manifest.count; ++i) {
    auto path = (fs::path(dir) / graph_file_name(i)).string();
    try {
      ds.graphs.push_back(read_graph_file(path));
    } catch (const std::exception &e) {
      if (skipped)
        skipped->push_back(path + ": " + e.what());
    }
  }
  return ds;
}

} // namespace maqaoa
