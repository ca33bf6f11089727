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
 * Angle-initialization heuristics for QAOA and MA-QAOA, and the driver that
 * walks p = 1, 2, ... carrying the best angles forward.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "maqaoa/angles.h"
#include "maqaoa/graph.h"
#include "maqaoa/optimize.h"
#include "maqaoa/simulator.h"

namespace maqaoa {

enum class StrategyId {
  // QAOA
  constant,
  tqa,
  interp,
  fourier,
  greedy,
  random,
  // MA-QAOA
  ma_constant,
  ma_interp,
  qaoa_relax,
  random_qaoa,
  ma_random,
};

enum class BudgetRule { one, p_attempts };

std::string_view to_token(StrategyId id);
StrategyId strategy_from_token(std::string_view token);
std::string_view to_token(BudgetRule rule);
BudgetRule budget_from_token(std::string_view token);
bool is_multi_angle(StrategyId id);
const std::vector<StrategyId> &all_strategies();

/// Which sign the constant initializer gives to gamma; beta gets the other.
enum class ConstantSign { gamma_positive, gamma_negative };

inline constexpr double kTargetRatio = 16.0 / 17.0;
inline constexpr double kDefaultConstant = 0.2;
inline const std::vector<double> kConstantSweep = {0.01, 0.05, 0.1,
                                                   0.2,  0.4,  1.0};

/// Shape of the angle vectors for one graph and ansatz kind.
struct AngleShape {
  AngleKind kind = AngleKind::shared;
  int num_edges = 0;
  int num_qubits = 0;

  static AngleShape shared() { return {}; }
  static AngleShape per_term(const Graph &g) {
    return {AngleKind::per_term, g.num_edges(), g.num_vertices()};
  }
  AngleSet zeros(int p) const;
};

AngleSet constant_init(int p, const AngleShape &shape, double c = kDefaultConstant,
                       ConstantSign sign = ConstantSign::gamma_positive);

/// gamma_i = (i - 1/2) dt / p, beta_i = dt - gamma_i.
AngleSet tqa_schedule(int p, double delta_t);

struct TqaParams {
  double lo = 0.1;
  double hi = 4.0;
  double repeat_tol = 1e-3;
  std::vector<double> tried;
};

/// Accepts `proposed` unless it lies within repeat_tol of a tried value, in
/// which case a fresh value is drawn uniformly from [lo, hi]. The returned
/// value is appended to `state.tried`.
double tqa_next_attempt(TqaParams &state, double proposed, std::mt19937_64 &rng);

/// Linear interpolation of each layer sequence from p-1 to p layers.
AngleSet interp_extend(const AngleSet &prev);

struct FourierParams {
  std::vector<double> u; ///< gamma amplitudes
  std::vector<double> v; ///< beta amplitudes

  FourierParams padded() const;
  std::vector<double> to_flat() const;
  static FourierParams from_flat(std::span<const double> flat);
};

/// gamma_i = sum_k u_k sin((k-1/2)(i-1/2) pi / p),
/// beta_i  = sum_k v_k cos((k-1/2)(i-1/2) pi / p).
AngleSet fourier_angles(const FourierParams &params, int p);
/// Inverse of fourier_angles for q = p (the sine/cosine bases are orthogonal).
FourierParams fourier_fit(const AngleSet &shared_angles);
/// Starting angles at level p from the level-(p-1) optimum.
AngleSet fourier_extend(const FourierParams &prev_best);

/// The p candidates obtained by inserting a zero layer at each position.
std::vector<AngleSet> greedy_inits(const AngleSet &prev);

/// Gamma uniform on [-pi, pi), beta uniform on [-pi/2, pi/2).
AngleSet random_init(int p, const AngleShape &shape, std::mt19937_64 &rng);
/// Random shared angles broadcast to every term of each layer.
AngleSet random_qaoa_init(int p, const Graph &g, std::mt19937_64 &rng);
AngleSet qaoa_relax_init(const AngleSet &qaoa_best, const Graph &g);
/// Adds N(0, scale^2) noise to every entry.
AngleSet perturb(const AngleSet &angles, double scale, std::mt19937_64 &rng);

/// Stable 64-bit seed for an RNG stream identified by a tuple of labels.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

struct ProgressionConfig {
  double constant = kDefaultConstant;
  ConstantSign constant_sign = ConstantSign::gamma_positive;
  double perturb_scale = 0.1;
  int anchor_attempts = 10;
  double target = kTargetRatio;
  TqaParams tqa;
  QuasiNewtonOptions quasi_newton;
  SimplexOptions simplex;
};

struct LevelResult {
  int p = 0;
  AngleSet angles;
  double expectation = 0.0;
  double ar = 0.0;
  std::uint64_t n_c_level = 0;
  std::uint64_t n_c_cumulative = 0;
  int attempts = 0;          ///< budgeted optimizer invocations
  int seeding_attempts = 0;  ///< unbudgeted p = 1 anchor attempts
  bool zero_padded = false;  ///< level failed to improve; previous angles kept
};

struct ProgressionState {
  std::vector<LevelResult> levels;
  bool monotone = true;

  const LevelResult &last() const { return levels.back(); }
};

/// Steps one graph through p = 1, 2, ... for a single strategy.
///
/// QaoaRelax needs the Constant-QAOA optimum at every level it reaches;
/// pass those through `qaoa_reference` (index p-1 holds level p).
class LayerProgression {
public:
  LayerProgression(GraphRecord graph, StrategyId strategy, BudgetRule budget,
                   std::uint64_t seed, ProgressionConfig config = {},
                   std::vector<AngleSet> qaoa_reference = {});

  const LevelResult &step();
  const ProgressionState &state() const { return state_; }
  int level() const { return static_cast<int>(state_.levels.size()); }
  bool reached_target() const {
    return !state_.levels.empty() && state_.last().ar > config_.target;
  }
  StrategyId strategy() const { return strategy_; }
  const GraphRecord &record() const { return record_; }

private:
  struct Attempt {
    std::vector<double> start; // in optimization coordinates
    bool simplex = false;
  };
  struct Outcome {
    bool ok = false;
    std::vector<double> x;
    double value = 0.0;
    std::uint64_t evals = 0;
  };

  AngleShape shape() const;
  std::mt19937_64 attempt_rng(int p, int attempt) const;
  Outcome optimize(const AngleSet &layout, bool fourier, const Attempt &a);
  AngleSet to_angles(const AngleSet &layout, bool fourier,
                     std::span<const double> x) const;

  GraphRecord record_;
  StrategyId strategy_;
  BudgetRule budget_;
  std::uint64_t seed_;
  ProgressionConfig config_;
  std::vector<AngleSet> qaoa_reference_;
  AnsatzEvaluator evaluator_;
  ProgressionState state_;
};

/// Runs a progression to p_max (or until the graph exceeds the target AR
/// when `stop_at_target`).
ProgressionState run_progression(const GraphRecord &g, StrategyId strategy,
                                 int p_max, BudgetRule budget,
                                 std::uint64_t seed,
                                 const ProgressionConfig &config = {},
                                 std::vector<AngleSet> qaoa_reference = {},
                                 bool stop_at_target = false);

} // namespace maqaoa
