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

#include "maqaoa/simulator.h"

#include <algorithm>
#include <bit>
#include <cmath>

namespace maqaoa {

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 16)
    throw DimensionError("qubit count must be in [1, 16], got " +
                         std::to_string(num_qubits));
  amps_.assign(std::size_t{1} << num_qubits, complex_t{0.0, 0.0});
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto &a : amps_)
    s += std::norm(a);
  return s;
}

CutTable::CutTable(const Graph &g)
    : n_(g.num_vertices()), edges_(g.edges()) {
  if (n_ < 1 || n_ > 16)
    throw DimensionError("cut table supports 1 <= n <= 16");
  for (auto [u, v] : edges_)
    edge_masks_.push_back((1u << u) | (1u << v));
  cuts_.assign(std::size_t{1} << n_, 0);
  for (std::uint32_t z = 0; z < cuts_.size(); ++z) {
    int c = 0;
    for (auto mask : edge_masks_)
      c += std::popcount(z & mask) & 1;
    cuts_[z] = static_cast<std::uint8_t>(c);
  }
}

StateVector init_plus_state(int num_qubits) {
  StateVector s(num_qubits);
  const double amp = std::pow(2.0, -0.5 * num_qubits);
  for (auto &a : s.amplitudes())
    a = {amp, 0.0};
  return s;
}

namespace {

void check_dims(const StateVector &state, const CutTable &table) {
  if (state.num_qubits() != table.num_qubits())
    throw DimensionError("state and cut table disagree on qubit count");
}

} // namespace

void apply_cost_layer(StateVector &state, const CutTable &table,
                      std::span<const double> gammas) {
  check_dims(state, table);
  if (static_cast<int>(gammas.size()) != table.num_edges())
    throw DimensionError("cost layer expects one gamma per edge");
  const auto &masks = table.edge_masks();
  auto amps = state.amplitudes();
  for (std::uint32_t z = 0; z < amps.size(); ++z) {
    double theta = 0.0;
    for (std::size_t e = 0; e < masks.size(); ++e)
      if (std::popcount(z & masks[e]) == 1)
        theta += gammas[e];
    amps[z] *= complex_t{std::cos(theta), -std::sin(theta)};
  }
}

void apply_cost_layer(StateVector &state, const CutTable &table, double gamma) {
  check_dims(state, table);
  std::vector<complex_t> phase(table.num_edges() + 1);
  for (std::size_t k = 0; k < phase.size(); ++k)
    phase[k] = {std::cos(gamma * k), -std::sin(gamma * k)};
  auto amps = state.amplitudes();
  const auto &cuts = table.cuts();
  for (std::size_t z = 0; z < amps.size(); ++z)
    amps[z] *= phase[cuts[z]];
}

namespace {

// exp(-i beta X) on one qubit: (a, b) -> (c a - i s b, -i s a + c b).
void rotate_x(std::span<complex_t> amps, int qubit, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride)
    for (std::size_t k = base; k < base + stride; ++k) {
      const complex_t a = amps[k];
      const complex_t b = amps[k + stride];
      amps[k] = {c * a.real() + s * b.imag(), c * a.imag() - s * b.real()};
      amps[k + stride] = {s * a.imag() + c * b.real(),
                          -s * a.real() + c * b.imag()};
    }
}

} // namespace

void apply_mixer_layer(StateVector &state, std::span<const double> betas) {
  if (static_cast<int>(betas.size()) != state.num_qubits())
    throw DimensionError("mixer layer expects one beta per qubit");
  for (int q = 0; q < state.num_qubits(); ++q)
    rotate_x(state.amplitudes(), q, betas[q]);
}

void apply_mixer_layer(StateVector &state, double beta) {
  for (int q = 0; q < state.num_qubits(); ++q)
    rotate_x(state.amplitudes(), q, beta);
}

double expectation_cut(const StateVector &state, const CutTable &table) {
  check_dims(state, table);
  const auto &cuts = table.cuts();
  auto amps = state.amplitudes();
  double s = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z)
    s += std::norm(amps[z]) * cuts[z];
  return s;
}

double run_ansatz(const Graph &g, const AngleSet &angles) {
  AnsatzEvaluator eval(g);
  return eval.expectation(angles);
}

double approximation_ratio(double expectation, int c_max) {
  if (c_max < 1)
    throw std::invalid_argument("approximation ratio needs c_max >= 1");
  double ar = expectation / c_max;
  if (ar > 1.0 && ar <= 1.0 + 1e-9)
    ar = 1.0;
  if (ar < 0.0 && ar >= -1e-9)
    ar = 0.0;
  return ar;
}

AnsatzEvaluator::AnsatzEvaluator(const Graph &g)
    : graph_(g), table_(g), state_(g.num_vertices()) {}

double AnsatzEvaluator::expectation(const AngleSet &angles) {
  if (angles.kind() == AngleKind::per_term &&
      (angles.num_edges() != graph_.num_edges() ||
       angles.num_qubits() != graph_.num_vertices()))
    throw DimensionError("per-term angle set does not match the graph");
  const int n = graph_.num_vertices();
  auto amps = state_.amplitudes();
  const double amp0 = std::pow(2.0, -0.5 * n);
  std::fill(amps.begin(), amps.end(), complex_t{amp0, 0.0});
  for (int l = 0; l < angles.layers(); ++l) {
    if (angles.kind() == AngleKind::shared) {
      apply_cost_layer(state_, table_, angles.gamma(l)[0]);
      apply_mixer_layer(state_, angles.beta(l)[0]);
    } else {
      apply_cost_layer(state_, table_, angles.gamma(l));
      apply_mixer_layer(state_, angles.beta(l));
    }
  }
  return expectation_cut(state_, table_);
}

double AnsatzEvaluator::expectation(const AngleSet &shape,
                                    std::span<const double> flat) {
  if (scratch_angles_.kind() != shape.kind() ||
      scratch_angles_.layers() != shape.layers() ||
      scratch_angles_.size() != shape.size())
    scratch_angles_ = shape;
  scratch_angles_.assign_flat(flat);
  return expectation(scratch_angles_);
}

} // namespace maqaoa
