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

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "maqaoa/graph.h"

namespace maqaoa {

struct DatasetRequest {
  int set_id = 0;
  int n = 9;
  double edge_prob = 0.6;
  int target_c_depth = 3;
  int count = 1000;
  std::uint64_t rng_seed = 0;
  std::uint64_t max_attempts = 10'000'000;
};

struct DatasetManifest {
  int set_id = 0;
  int n = 0;
  double edge_prob = 0.0;
  int target_c_depth = 0;
  int count = 0;
  std::uint64_t rng_seed = 0;
  /// Graphs with diameter = c_depth - 1, c_depth, c_depth + 1.
  std::array<int, 3> diameter_histogram{};
};

struct Dataset {
  DatasetManifest manifest;
  std::vector<GraphRecord> graphs;
};

/// Thrown when the attempt cap runs out before `count` graphs were found.
class DatasetExhausted : public std::runtime_error {
public:
  DatasetExhausted(int collected, std::uint64_t attempts);
  int collected;
};

/// Rejection-samples connected, pairwise non-isomorphic Erdos-Renyi graphs
/// whose covering depth equals the target.
Dataset generate_dataset(const DatasetRequest &req);

std::string graph_file_name(int idx);

/// Writes manifest.json and graph_XXXX.txt into `dir` (created if needed).
void write_dataset(const Dataset &ds, const std::string &dir);

/// Reads a dataset directory. Graph files that fail to parse are skipped
/// and reported through `skipped` when non-null.
Dataset read_dataset(const std::string &dir,
                     std::vector<std::string> *skipped = nullptr);

std::string manifest_to_json(const DatasetManifest &m);
DatasetManifest manifest_from_json(const std::string &text);

} // namespace maqaoa
