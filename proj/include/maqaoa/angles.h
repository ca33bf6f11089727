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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maqaoa {

enum class AngleKind { shared, per_term };

/// Layered QAOA angles (radians). Shared sets carry one gamma and one beta per
/// layer; per-term sets carry one gamma per edge and one beta per qubit.
/// Storage is layer-major.
class AngleSet {
public:
  AngleSet() = default;

  static AngleSet shared(int p);
  static AngleSet per_term(int p, int num_edges, int num_qubits);
  static AngleSet shared(std::vector<double> gammas, std::vector<double> betas);

  AngleKind kind() const { return kind_; }
  int layers() const { return p_; }
  int gamma_width() const { return gw_; }
  int beta_width() const { return bw_; }
  /// Only meaningful for per-term sets; zero for shared ones.
  int num_edges() const { return kind_ == AngleKind::per_term ? gw_ : 0; }
  int num_qubits() const { return kind_ == AngleKind::per_term ? bw_ : 0; }
  std::size_t size() const { return gamma_.size() + beta_.size(); }

  std::span<double> gamma(int layer) {
    return {gamma_.data() + layer * gw_, static_cast<std::size_t>(gw_)};
  }
  std::span<const double> gamma(int layer) const {
    return {gamma_.data() + layer * gw_, static_cast<std::size_t>(gw_)};
  }
  std::span<double> beta(int layer) {
    return {beta_.data() + layer * bw_, static_cast<std::size_t>(bw_)};
  }
  std::span<const double> beta(int layer) const {
    return {beta_.data() + layer * bw_, static_cast<std::size_t>(bw_)};
  }
  const std::vector<double> &gammas() const { return gamma_; }
  const std::vector<double> &betas() const { return beta_; }

  /// Flat parameter vector: [gamma layer 1, beta layer 1, gamma layer 2, ...].
  std::vector<double> to_flat() const;
  void assign_flat(std::span<const double> flat);
  AngleSet with_flat(std::span<const double> flat) const;

  /// Inserts an all-zero layer so that it becomes layer `pos` (0-based).
  AngleSet with_zero_layer(int pos) const;
  AngleSet zero_padded() const { return with_zero_layer(p_); }

  /// Copies each layer's shared angles to every edge and qubit.
  AngleSet broadcast(int num_edges, int num_qubits) const;

  /// Compact JSON array in flat order, 17 significant digits.
  std::string to_json() const;
  /// Parses the flat JSON array produced by to_json for the given shape.
  static AngleSet from_json(const std::string &text, AngleKind kind, int p,
                            int num_edges, int num_qubits);

  bool operator==(const AngleSet &) const = default;

private:
  AngleKind kind_ = AngleKind::shared;
  int p_ = 0;
  int gw_ = 1;
  int bw_ = 1;
  std::vector<double> gamma_;
  std::vector<double> beta_;
};

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace maqaoa
