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
 * Exact state-vector evaluation of QAOA and multi-angle QAOA expectation
 * values for MaxCut.
 *
 * Basis state z is stored at index z; vertex i corresponds to bit i of z
 * (little-endian). Each layer applies exp(-i sum_e gamma_e C_e) followed by
 * exp(-i sum_q beta_q X_q), where C_e = (1 - Z_u Z_v) / 2.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "maqaoa/angles.h"
#include "maqaoa/graph.h"

namespace maqaoa {

using complex_t = std::complex<double>;

class StateVector {
public:
  StateVector() = default;
  explicit StateVector(int num_qubits);

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<complex_t> amplitudes() { return amps_; }
  std::span<const complex_t> amplitudes() const { return amps_; }
  complex_t &operator[](std::size_t z) { return amps_[z]; }
  const complex_t &operator[](std::size_t z) const { return amps_[z]; }

  double norm_squared() const;

private:
  int n_ = 0;
  std::vector<complex_t> amps_;
};

/// Immutable per-graph cost diagonal. Shareable across threads.
class CutTable {
public:
  explicit CutTable(const Graph &g);

  int num_qubits() const { return n_; }
  int num_edges() const { return static_cast<int>(edge_masks_.size()); }
  /// Bit mask with bits u and v set for each edge (u, v).
  const std::vector<std::uint32_t> &edge_masks() const { return edge_masks_; }
  /// C(z) for every basis state.
  const std::vector<std::uint8_t> &cuts() const { return cuts_; }
  int cut(std::uint32_t z) const { return cuts_[z]; }

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> edge_masks_;
  std::vector<std::uint8_t> cuts_;
};

StateVector init_plus_state(int num_qubits);

/// Multiplies amplitude z by exp(-i sum_e gamma_e [z_u != z_v]).
void apply_cost_layer(StateVector &state, const CutTable &table,
                      std::span<const double> gammas);
/// Shared-angle cost layer exp(-i gamma C); O(2^n) through the cut lookup.
void apply_cost_layer(StateVector &state, const CutTable &table, double gamma);

/// Applies exp(-i beta_q X_q) on every qubit q.
void apply_mixer_layer(StateVector &state, std::span<const double> betas);
void apply_mixer_layer(StateVector &state, double beta);

double expectation_cut(const StateVector &state, const CutTable &table);

/// Builds |+>^n, applies cost then mixer for each layer, returns <C>.
double run_ansatz(const Graph &g, const AngleSet &angles);

/// AR = expectation / c_max, with overshoot up to 1e-9 clamped to 1.
double approximation_ratio(double expectation, int c_max);

/// Reusable evaluator bound to one graph. Holds a scratch state, so an
/// instance must be confined to a single thread.
class AnsatzEvaluator {
public:
  explicit AnsatzEvaluator(const Graph &g);

  const Graph &graph() const { return graph_; }
  const CutTable &table() const { return table_; }

  double expectation(const AngleSet &angles);
  /// Evaluates a flat parameter vector laid out like `shape`.
  double expectation(const AngleSet &shape, std::span<const double> flat);

private:
  Graph graph_;
  CutTable table_;
  StateVector state_;
  AngleSet scratch_angles_;
};

} // namespace maqaoa
