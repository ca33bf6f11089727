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

#include "maqaoa/graph.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace maqaoa {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1 || n > 32)
    throw GraphError("vertex count out of range: " + std::to_string(n));
  for (auto &[u, v] : edges) {
    if (u > v)
      std::swap(u, v);
    if (u < 0 || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw GraphError("duplicate edge");
  edges_ = std::move(edges);
}

std::vector<std::uint32_t> Graph::adjacency_masks() const {
  std::vector<std::uint32_t> adj(n_, 0);
  for (auto [u, v] : edges_) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

Graph Graph::relabeled(const std::vector<int> &perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw GraphError("permutation size mismatch");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_)
    out.emplace_back(perm[u], perm[v]);
  return Graph(n_, std::move(out));
}

Graph erdos_renyi(int n, double prob, std::mt19937_64 &rng) {
  if (n < 2)
    throw GraphError("erdos_renyi needs n >= 2");
  if (!(prob > 0.0 && prob < 1.0))
    throw GraphError("edge probability must lie in (0, 1)");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unif(rng) < prob)
        edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

namespace {

// BFS distances from `src` over bitmask adjacency; -1 when unreachable.
std::vector<int> bfs(const std::vector<std::uint32_t> &adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (std::uint32_t m = adj[u]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

int eccentricity_max(const std::vector<std::vector<int>> &nbrs) {
  int best = 0;
  const int n = static_cast<int>(nbrs.size());
  std::vector<int> dist(n);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : nbrs[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
    }
    if (tail != n)
      throw GraphError("graph is disconnected");
    best = std::max(best, dist[queue[tail - 1]]);
  }
  return best;
}

} // namespace

bool is_connected(const Graph &g) {
  auto dist = bfs(g.adjacency_masks(), 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph &g) {
  std::vector<std::vector<int>> nbrs(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  return eccentricity_max(nbrs);
}

int covering_depth(const Graph &g) {
  if (g.num_edges() == 0)
    throw GraphError("covering depth needs at least one edge");
  if (!is_connected(g))
    throw GraphError("graph is disconnected");
  const auto &edges = g.edges();
  const int m = g.num_edges();
  std::vector<std::vector<int>> incident(g.num_vertices());
  for (int e = 0; e < m; ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  std::vector<std::vector<int>> line(m);
  for (const auto &inc : incident)
    for (int a : inc)
      for (int b : inc)
        if (a != b)
          line[a].push_back(b);
  return eccentricity_max(line);
}

int cut_value(const Graph &g, std::uint32_t assignment) {
  int cut = 0;
  for (auto [u, v] : g.edges())
    cut += ((assignment >> u) ^ (assignment >> v)) & 1u;
  return cut;
}

int cut_value(const Graph &g, const std::string &assignment) {
  if (static_cast<int>(assignment.size()) != g.num_vertices())
    throw GraphError("assignment length must equal vertex count");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == '1')
      mask |= 1u << i;
    else if (assignment[i] != '0')
      throw GraphError("assignment must be a 0/1 string");
  }
  return cut_value(g, mask);
}

MaxCutSolution max_cut_brute_force(const Graph &g) {
  const int n = g.num_vertices();
  if (n > 24)
    throw GraphError("brute force limited to n <= 24");
  auto adj = g.adjacency_masks();
  MaxCutSolution best{-1, 0};
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // Vertex 0 stays on side 0; the complementary assignment has equal cut.
  for (std::uint32_t half = 0; half < (1u << (n - 1)); ++half) {
    std::uint32_t z = half << 1;
    int twice = 0;
    for (int u = 0; u < n; ++u) {
      std::uint32_t other = ((z >> u) & 1u) ? (~z & full) : z;
      twice += std::popcount(adj[u] & other);
    }
    if (twice / 2 > best.c_max)
      best = {twice / 2, z};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Canonical labelling.
//
// Colour refinement with individualization; the search tree explores every
// individualization of the first non-singleton cell, skipping vertices that
// are twins of an already explored one (swapping twins is an automorphism
// that preserves the colouring). Each leaf is a discrete colouring, i.e. a
// relabelling; the key is the lexicographically smallest adjacency bit
// string over all leaves.

namespace {

class Canonizer {
public:
  explicit Canonizer(const Graph &g)
      : n_(g.num_vertices()), adj_(g.adjacency_masks()) {}

  std::string run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors);
    return best_;
  }

private:
  int n_;
  std::vector<std::uint32_t> adj_;
  std::string best_;
  bool have_best_ = false;

  // Recolours by rank of (colour, sorted neighbour colours) until stable.
  void refine(std::vector<int> &colors) const {
    int num_colors = count_colors(colors);
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        auto &s = sig[v].first;
        s.push_back(colors[v]);
        std::vector<int> nb;
        for (std::uint32_t m = adj_[v]; m; m &= m - 1)
          nb.push_back(colors[std::countr_zero(m)]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v].second = v;
      }
      std::vector<std::vector<int>> distinct;
      for (const auto &s : sig)
        distinct.push_back(s.first);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      for (int v = 0; v < n_; ++v)
        colors[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) -
            distinct.begin());
      int next = static_cast<int>(distinct.size());
      if (next == num_colors)
        return;
      num_colors = next;
    }
  }

  static int count_colors(const std::vector<int> &colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool twins(int a, int b) const {
    std::uint32_t mask = ~((1u << a) | (1u << b));
    return (adj_[a] & mask) == (adj_[b] & mask);
  }

  std::string key_for(const std::vector<int> &label) const {
    std::vector<std::uint32_t> relabeled(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (std::uint32_t m = adj_[v]; m; m &= m - 1)
        relabeled[label[v]] |= 1u << label[std::countr_zero(m)];
    std::string key(1, static_cast<char>(n_));
    unsigned char byte = 0;
    int nbits = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        byte = static_cast<unsigned char>((byte << 1) |
                                          ((relabeled[i] >> j) & 1u));
        if (++nbits == 8) {
          key.push_back(static_cast<char>(byte));
          byte = 0;
          nbits = 0;
        }
      }
    if (nbits)
      key.push_back(static_cast<char>(byte << (8 - nbits)));
    return key;
  }

  void search(const std::vector<int> &colors) {
    std::vector<int> cell_size(n_, 0);
    for (int c : colors)
      ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::string key = key_for(colors);
      if (!have_best_ || key < best_) {
        best_ = std::move(key);
        have_best_ = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target)
        continue;
      if (std::any_of(tried.begin(), tried.end(),
                      [&](int t) { return twins(t, v); }))
        continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int w = 0; w < n_; ++w)
        next[w] = 2 * colors[w] + (w == v ? 0 : 1);
      refine(next);
      search(next);
    }
  }
};

} // namespace

std::string canonical_key(const Graph &g) {
  if (g.num_vertices() > 16)
    throw GraphError("canonical_key supports n <= 16");
  return Canonizer(g).run();
}

GraphRecord make_record(Graph g, std::string id) {
  if (!is_connected(g))
    throw GraphError("graph record requires a connected graph");
  GraphRecord rec;
  rec.c_max = max_cut_brute_force(g).c_max;
  rec.diameter = diameter(g);
  rec.c_depth = g.num_edges() > 0 ? covering_depth(g) : 0;
  rec.graph = std::move(g);
  rec.id = std::move(id);
  return rec;
}

std::string format_graph_file(const GraphRecord &rec) {
  std::ostringstream os;
  os << rec.graph.num_vertices() << ' ' << rec.graph.num_edges() << '\n';
  for (auto [u, v] : rec.graph.edges())
    os << u << ' ' << v << '\n';
  os << "# c_max " << rec.c_max << '\n';
  os << "# diameter " << rec.diameter << '\n';
  os << "# c_depth " << rec.c_depth << '\n';
  return os.str();
}

GraphRecord parse_graph_file(const std::string &text, std::string id) {
  std::istringstream is(text);
  std::string line;
  auto next_data_line = [&](std::string &out) {
    while (std::getline(is, out))
      if (!out.empty() && out[0] != '#')
        return true;
    return false;
  };
  if (!next_data_line(line))
    throw GraphError("graph file: missing header");
  int n = 0, m = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || m < 0)
      throw GraphError("graph file: malformed header '" + line + "'");
  }
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    if (!next_data_line(line))
      throw GraphError("graph file: expected " + std::to_string(m) +
                       " edges, got " + std::to_string(e));
    std::istringstream es(line);
    int u = 0, v = 0;
    if (!(es >> u >> v))
      throw GraphError("graph file: malformed edge '" + line + "'");
    edges.emplace_back(u, v);
  }
  Graph g(n, std::move(edges));

  std::map<std::string, int> meta;
  is.clear();
  is.seekg(0);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] != '#')
      continue;
    std::istringstream cs(line.substr(1));
    std::string key;
    int value = 0;
    if (cs >> key >> value)
      meta[key] = value;
  }

  GraphRecord rec;
  if (meta.count("c_max") && meta.count("diameter") && meta.count("c_depth")) {
    rec.graph = std::move(g);
    rec.c_max = meta["c_max"];
    rec.diameter = meta["diameter"];
    rec.c_depth = meta["c_depth"];
    rec.id = std::move(id);
  } else {
    rec = make_record(std::move(g), std::move(id));
  }
  return rec;
}

GraphRecord read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw GraphError("cannot open graph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos)
    stem.resize(dot);
  return parse_graph_file(ss.str(), stem);
}

} // namespace maqaoa
