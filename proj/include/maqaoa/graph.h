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
 * Undirected simple graphs for unweighted MaxCut instances, plus the
 * structural quantities used to bin random datasets.
 */

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maqaoa {

using Edge = std::pair<int, int>;

/// Undirected simple graph. Edges are stored with u < v, sorted
/// lexicographically; the constructor canonicalizes and validates.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }

  /// Adjacency as one bitmask per vertex (bit j of row i set iff i~j).
  std::vector<std::uint32_t> adjacency_masks() const;
  std::vector<int> degrees() const;

  /// Relabels vertex v as perm[v].
  Graph relabeled(const std::vector<int> &perm) const;

  bool operator==(const Graph &) const = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A graph together with the precomputed quantities stored in dataset files.
struct GraphRecord {
  Graph graph;
  int c_max = 0;
  int diameter = 0;
  int c_depth = 0;
  std::string id;
};

struct MaxCutSolution {
  int c_max = 0;
  std::uint32_t assignment = 0; ///< bit i = side of vertex i; bit 0 is 0
};

Graph erdos_renyi(int n, double prob, std::mt19937_64 &rng);

bool is_connected(const Graph &g);

/// Exact canonical form: equal keys iff the graphs are isomorphic.
std::string canonical_key(const Graph &g);

int diameter(const Graph &g);

/// Diameter of the line graph: the number of layers after which the light
/// cone of any edge has reached every other edge.
int covering_depth(const Graph &g);

/// `assignment` is either a bit string ("0101", char i = vertex i) or a mask.
int cut_value(const Graph &g, std::uint32_t assignment);
int cut_value(const Graph &g, const std::string &assignment);

MaxCutSolution max_cut_brute_force(const Graph &g);

GraphRecord make_record(Graph g, std::string id);

// Graph text format: "n m", then m lines "u v", then optional "# key value".
std::string format_graph_file(const GraphRecord &rec);
GraphRecord parse_graph_file(const std::string &text, std::string id = {});
GraphRecord read_graph_file(const std::string &path);

} // namespace maqaoa
