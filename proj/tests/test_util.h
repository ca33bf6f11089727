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

// Independent oracles and generators shared by the test suites. Nothing here
// calls the code paths it is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "maqaoa/graph.h"

namespace maqaoa::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i)
    e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

/// Random connected graph: keep sampling G(n, prob) until connected.
inline Graph random_connected(int n, double prob, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(prob);
  while (true) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng))
          e.emplace_back(i, j);
    // Union-find connectivity check.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = n;
    for (auto [u, v] : e) {
      int a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    if (comps == 1 && !e.empty())
      return Graph(n, e);
  }
}

inline std::vector<int> random_permutation(int n, std::mt19937_64 &rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Max cut by full enumeration of all 2^n assignments.
inline int max_cut_enumerate(const Graph &g) {
  int best = 0;
  const int n = g.num_vertices();
  for (std::uint32_t z = 0; z < (1u << n); ++z) {
    int c = 0;
    for (auto [u, v] : g.edges())
      if (((z >> u) & 1u) != ((z >> v) & 1u))
        ++c;
    best = std::max(best, c);
  }
  return best;
}

/// Isomorphism by trying every vertex bijection.
inline bool isomorphic_brute_force(const Graph &a, const Graph &b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  const int n = a.num_vertices();
  std::vector<std::vector<bool>> mb(n, std::vector<bool>(n, false));
  for (auto [u, v] : b.edges())
    mb[u][v] = mb[v][u] = true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!mb[perm[u]][perm[v]]) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All-pairs distances with Floyd-Warshall on an explicit adjacency matrix.
inline std::vector<std::vector<int>>
floyd_warshall(const std::vector<std::vector<bool>> &adj) {
  const int n = static_cast<int>(adj.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j)
        d[i][j] = 0;
      else if (adj[i][j])
        d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int max_entry(const std::vector<std::vector<int>> &d) {
  int m = 0;
  for (const auto &row : d)
    for (int x : row)
      m = std::max(m, x);
  return m;
}

inline int diameter_oracle(const Graph &g) {
  std::vector<std::vector<bool>> adj(g.num_vertices(),
                                     std::vector<bool>(g.num_vertices(), false));
  for (auto [u, v] : g.edges())
    adj[u][v] = adj[v][u] = true;
  return max_entry(floyd_warshall(adj));
}

/// Diameter of the explicitly constructed line graph.
inline int line_graph_diameter_oracle(const Graph &g) {
  const auto &e = g.edges();
  const int m = static_cast<int>(e.size());
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && (e[a].first == e[b].first || e[a].first == e[b].second ||
                     e[a].second == e[b].first || e[a].second == e[b].second))
        adj[a][b] = true;
  return max_entry(floyd_warshall(adj));
}

/// Dense-matrix QAOA expectation: builds exp(-i beta X) as a 2x2 tensor
/// action per qubit and the cost phases edge by edge. Slow but plain.
inline double qaoa_expectation_oracle(const Graph &g,
                                      const std::vector<double> &gammas,
                                      const std::vector<double> &betas) {
  using cd = std::complex<double>;
  const int n = g.num_vertices();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cd> psi(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  for (std::size_t l = 0; l < gammas.size(); ++l) {
    for (std::size_t z = 0; z < dim; ++z)
      for (auto [u, v] : g.edges())
        if (((z >> u) & 1u) != ((z >> v) & 1u))
          psi[z] *= std::exp(cd(0.0, -gammas[l]));
    for (int q = 0; q < n; ++q) {
      std::vector<cd> next(dim);
      const cd c(std::cos(betas[l]), 0.0), s(0.0, -std::sin(betas[l]));
      for (std::size_t z = 0; z < dim; ++z)
        next[z] = c * psi[z] + s * psi[z ^ (std::size_t{1} << q)];
      psi = next;
    }
  }
  double e = 0.0;
  for (std::size_t z = 0; z < dim; ++z) {
    int c = 0;
    for (auto [u, v] : g.edges())
      c += ((z >> u) & 1u) != ((z >> v) & 1u);
    e += std::norm(psi[z]) * c;
  }
  return e;
}

} // namespace maqaoa::testing
