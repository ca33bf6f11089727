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

#include "maqaoa/strategies.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maqaoa {

namespace {

struct StrategyInfo {
  StrategyId id;
  std::string_view token;
  bool multi_angle;
};

constexpr std::array<StrategyInfo, 11> kStrategies{{
    {StrategyId::constant, "constant", false},
    {StrategyId::tqa, "tqa", false},
    {StrategyId::interp, "interp", false},
    {StrategyId::fourier, "fourier", false},
    {StrategyId::greedy, "greedy", false},
    {StrategyId::random, "random", false},
    {StrategyId::ma_constant, "ma-constant", true},
    {StrategyId::ma_interp, "ma-interp", true},
    {StrategyId::qaoa_relax, "qaoa-relax", true},
    {StrategyId::random_qaoa, "random-qaoa", true},
    {StrategyId::ma_random, "ma-random", true},
}};

const StrategyInfo &info(StrategyId id) {
  for (const auto &s : kStrategies)
    if (s.id == id)
      return s;
  throw std::invalid_argument("unknown strategy id");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void add_noise(std::span<double> xs, double scale, std::mt19937_64 &rng) {
  std::normal_distribution<double> noise(0.0, scale);
  for (double &x : xs)
    x += noise(rng);
}

} // namespace

std::string_view to_token(StrategyId id) { return info(id).token; }

StrategyId strategy_from_token(std::string_view token) {
  for (const auto &s : kStrategies)
    if (s.token == token)
      return s.id;
  throw std::invalid_argument("unknown strategy '" + std::string(token) + "'");
}

std::string_view to_token(BudgetRule rule) {
  return rule == BudgetRule::one ? "one" : "p";
}

BudgetRule budget_from_token(std::string_view token) {
  if (token == "one")
    return BudgetRule::one;
  if (token == "p")
    return BudgetRule::p_attempts;
  throw std::invalid_argument("budget must be 'one' or 'p', got '" +
                              std::string(token) + "'");
}

bool is_multi_angle(StrategyId id) { return info(id).multi_angle; }

const std::vector<StrategyId> &all_strategies() {
  static const std::vector<StrategyId> ids = [] {
    std::vector<StrategyId> out;
    for (const auto &s : kStrategies)
      out.push_back(s.id);
    return out;
  }();
  return ids;
}

AngleSet AngleShape::zeros(int p) const {
  return kind == AngleKind::shared ? AngleSet::shared(p)
                                   : AngleSet::per_term(p, num_edges, num_qubits);
}

AngleSet constant_init(int p, const AngleShape &shape, double c,
                       ConstantSign sign) {
  AngleSet a = shape.zeros(p);
  const double g = sign == ConstantSign::gamma_positive ? c : -c;
  for (int l = 0; l < p; ++l) {
    std::ranges::fill(a.gamma(l), g);
    std::ranges::fill(a.beta(l), -g);
  }
  return a;
}

AngleSet tqa_schedule(int p, double delta_t) {
  if (p < 1)
    throw std::invalid_argument("TQA schedule needs p >= 1");
  std::vector<double> gammas(p), betas(p);
  for (int i = 1; i <= p; ++i) {
    gammas[i - 1] = (i - 0.5) * delta_t / p;
    betas[i - 1] = delta_t - gammas[i - 1];
  }
  return AngleSet::shared(std::move(gammas), std::move(betas));
}

double tqa_next_attempt(TqaParams &state, double proposed, std::mt19937_64 &rng) {
  double dt = proposed;
  auto repeated = [&](double x) {
    return std::ranges::any_of(state.tried, [&](double t) {
      return std::abs(t - x) < state.repeat_tol;
    });
  };
  if (repeated(dt)) {
    std::uniform_real_distribution<double> unif(state.lo, state.hi);
    dt = unif(rng);
  }
  state.tried.push_back(dt);
  return dt;
}

AngleSet interp_extend(const AngleSet &prev) {
  const int q = prev.layers();
  if (q < 1)
    throw std::invalid_argument("interp needs at least one previous layer");
  const int p = q + 1;
  AngleSet out = prev.zero_padded();
  auto extend = [&](auto get_prev, auto get_out, int width) {
    for (int j = 0; j < width; ++j) {
      auto at = [&](int i) { // 1-based, zero outside [1, q]
        return (i >= 1 && i <= q) ? get_prev(i - 1)[j] : 0.0;
      };
      for (int i = 1; i <= p; ++i)
        get_out(i - 1)[j] = (static_cast<double>(i - 1) / q) * at(i - 1) +
                            (static_cast<double>(p - i) / q) * at(i);
    }
  };
  extend([&](int l) { return prev.gamma(l); },
         [&](int l) { return out.gamma(l); }, prev.gamma_width());
  extend([&](int l) { return prev.beta(l); },
         [&](int l) { return out.beta(l); }, prev.beta_width());
  return out;
}

FourierParams FourierParams::padded() const {
  FourierParams out = *this;
  out.u.push_back(0.0);
  out.v.push_back(0.0);
  return out;
}

std::vector<double> FourierParams::to_flat() const {
  std::vector<double> flat(u);
  flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

FourierParams FourierParams::from_flat(std::span<const double> flat) {
  if (flat.size() % 2)
    throw DimensionError("Fourier parameter vector must have even length");
  const auto q = flat.size() / 2;
  return {{flat.begin(), flat.begin() + q}, {flat.begin() + q, flat.end()}};
}

namespace {

double fourier_arg(int k, int i, int p) {
  return (k - 0.5) * (i - 0.5) * std::numbers::pi / p;
}

} // namespace

AngleSet fourier_angles(const FourierParams &params, int p) {
  if (params.u.size() != params.v.size())
    throw DimensionError("Fourier u and v lengths differ");
  AngleSet a = AngleSet::shared(p);
  const int q = static_cast<int>(params.u.size());
  for (int i = 1; i <= p; ++i) {
    double g = 0.0, b = 0.0;
    for (int k = 1; k <= q; ++k) {
      g += params.u[k - 1] * std::sin(fourier_arg(k, i, p));
      b += params.v[k - 1] * std::cos(fourier_arg(k, i, p));
    }
    a.gamma(i - 1)[0] = g;
    a.beta(i - 1)[0] = b;
  }
  return a;
}

FourierParams fourier_fit(const AngleSet &shared_angles) {
  if (shared_angles.kind() != AngleKind::shared)
    throw DimensionError("Fourier fit expects shared angles");
  const int p = shared_angles.layers();
  FourierParams out{std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
  for (int k = 1; k <= p; ++k)
    for (int i = 1; i <= p; ++i) {
      out.u[k - 1] += 2.0 / p * shared_angles.gamma(i - 1)[0] *
                      std::sin(fourier_arg(k, i, p));
      out.v[k - 1] += 2.0 / p * shared_angles.beta(i - 1)[0] *
                      std::cos(fourier_arg(k, i, p));
    }
  return out;
}

AngleSet fourier_extend(const FourierParams &prev_best) {
  auto next = prev_best.padded();
  return fourier_angles(next, static_cast<int>(next.u.size()));
}

std::vector<AngleSet> greedy_inits(const AngleSet &prev) {
  if (prev.layers() < 1)
    throw std::invalid_argument("greedy needs at least one previous layer");
  std::vector<AngleSet> out;
  for (int pos = 0; pos <= prev.layers(); ++pos)
    out.push_back(prev.with_zero_layer(pos));
  return out;
}

AngleSet random_init(int p, const AngleShape &shape, std::mt19937_64 &rng) {
  AngleSet a = shape.zeros(p);
  std::uniform_real_distribution<double> gamma_dist(-std::numbers::pi,
                                                    std::numbers::pi);
  std::uniform_real_distribution<double> beta_dist(-std::numbers::pi / 2,
                                                   std::numbers::pi / 2);
  for (int l = 0; l < p; ++l) {
    for (double &g : a.gamma(l))
      g = gamma_dist(rng);
    for (double &b : a.beta(l))
      b = beta_dist(rng);
  }
  return a;
}

AngleSet random_qaoa_init(int p, const Graph &g, std::mt19937_64 &rng) {
  return random_init(p, AngleShape::shared(), rng)
      .broadcast(g.num_edges(), g.num_vertices());
}

AngleSet qaoa_relax_init(const AngleSet &qaoa_best, const Graph &g) {
  return qaoa_best.broadcast(g.num_edges(), g.num_vertices());
}

AngleSet perturb(const AngleSet &angles, double scale, std::mt19937_64 &rng) {
  if (!(scale >= 0.0))
    throw std::invalid_argument("perturbation scale must be non-negative");
  auto flat = angles.to_flat();
  if (scale > 0.0)
    add_noise(flat, scale, rng);
  return angles.with_flat(flat);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::uint64_t s = splitmix64(master ^ splitmix64(h));
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ (b + 0x632be59bd9b4e019ull));
  s = splitmix64(s ^ (c + 0x8cb92ba72f3d8dd7ull));
  return s;
}

// ---------------------------------------------------------------------------

LayerProgression::LayerProgression(GraphRecord graph, StrategyId strategy,
                                   BudgetRule budget, std::uint64_t seed,
                                   ProgressionConfig config,
                                   std::vector<AngleSet> qaoa_reference)
    : record_(std::move(graph)), strategy_(strategy), budget_(budget),
      seed_(seed), config_(std::move(config)),
      qaoa_reference_(std::move(qaoa_reference)), evaluator_(record_.graph) {
  if (strategy_ == StrategyId::greedy && budget_ != BudgetRule::p_attempts)
    throw std::invalid_argument("greedy requires the p-attempts budget");
  if (record_.c_max < 1)
    throw std::invalid_argument("graph " + record_.id + " has no edges");
}

AngleShape LayerProgression::shape() const {
  return is_multi_angle(strategy_) ? AngleShape::per_term(record_.graph)
                                   : AngleShape::shared();
}

std::mt19937_64 LayerProgression::attempt_rng(int p, int attempt) const {
  return std::mt19937_64(derive_seed(seed_, to_token(strategy_),
                                     static_cast<std::uint64_t>(p),
                                     static_cast<std::uint64_t>(attempt)));
}

AngleSet LayerProgression::to_angles(const AngleSet &layout, bool fourier,
                                     std::span<const double> x) const {
  if (fourier)
    return fourier_angles(FourierParams::from_flat(x), layout.layers());
  return layout.with_flat(x);
}

LayerProgression::Outcome LayerProgression::optimize(const AngleSet &layout,
                                                     bool fourier,
                                                     const Attempt &a) {
  AngleSet scratch = layout;
  Objective obj(
      [&](std::span<const double> x) {
        if (fourier) {
          scratch = fourier_angles(FourierParams::from_flat(x), layout.layers());
          return evaluator_.expectation(scratch);
        }
        return evaluator_.expectation(layout, x);
      },
      a.start.size());
  OptimizerResult r = a.simplex
                          ? maximize_simplex(obj, a.start, config_.simplex)
                          : maximize_quasi_newton(obj, a.start,
                                                  config_.quasi_newton);
  Outcome out;
  out.evals = r.n_evals;
  out.ok = !r.aborted && std::isfinite(r.best_value);
  out.x = std::move(r.best_angles);
  out.value = r.best_value;
  return out;
}

const LevelResult &LayerProgression::step() {
  const int p = level() + 1;
  const LevelResult *prev = state_.levels.empty() ? nullptr : &state_.last();
  const AngleShape sh = shape();
  const AngleSet layout = sh.zeros(p);
  const int budget = budget_ == BudgetRule::one ? 1 : p;
  const bool fourier = strategy_ == StrategyId::fourier;

  LevelResult res;
  res.p = p;
  std::vector<Attempt> attempts;
  std::uint64_t extra_evals = 0;
  bool anchor = false;

  auto push_angles = [&](const AngleSet &a, bool simplex = false) {
    attempts.push_back({a.to_flat(), simplex});
  };
  auto push_perturbed = [&](std::vector<double> base) {
    for (int k = 1; k < budget; ++k) {
      auto rng = attempt_rng(p, k);
      std::vector<double> x = base;
      add_noise(x, config_.perturb_scale, rng);
      attempts.push_back({std::move(x), false});
    }
  };

  switch (strategy_) {
  case StrategyId::constant:
  case StrategyId::ma_constant:
    push_angles(constant_init(p, sh, config_.constant, config_.constant_sign));
    break;
  case StrategyId::tqa: {
    Objective scalar(
        [&](std::span<const double> dt) {
          return evaluator_.expectation(tqa_schedule(p, dt[0]));
        },
        1);
    auto best_dt = maximize_scalar(scalar, config_.tqa.lo, config_.tqa.hi);
    extra_evals += best_dt.n_evals;
    TqaParams tq = config_.tqa;
    tq.tried.clear();
    for (int k = 0; k < budget; ++k) {
      auto rng = attempt_rng(p, k);
      push_angles(tqa_schedule(p, tqa_next_attempt(tq, best_dt.best_angles[0], rng)));
    }
    break;
  }
  case StrategyId::random:
  case StrategyId::ma_random:
    for (int k = 0; k < budget; ++k) {
      auto rng = attempt_rng(p, k);
      push_angles(random_init(p, sh, rng));
    }
    break;
  case StrategyId::random_qaoa:
    for (int k = 0; k < budget; ++k) {
      auto rng = attempt_rng(p, k);
      push_angles(random_qaoa_init(p, record_.graph, rng));
    }
    break;
  case StrategyId::qaoa_relax: {
    if (static_cast<int>(qaoa_reference_.size()) < p)
      throw std::invalid_argument("qaoa-relax on graph " + record_.id +
                                  " needs the constant QAOA optimum at p=" +
                                  std::to_string(p));
    auto base = qaoa_relax_init(qaoa_reference_[p - 1], record_.graph);
    push_angles(base);
    push_perturbed(base.to_flat());
    break;
  }
  case StrategyId::interp:
  case StrategyId::ma_interp:
  case StrategyId::fourier:
  case StrategyId::greedy:
    if (p == 1) {
      anchor = true;
      // Shared by every strategy on this graph, hence no strategy label.
      const char *label = is_multi_angle(strategy_) ? "anchor-per-term"
                                                    : "anchor-shared";
      for (int k = 0; k < config_.anchor_attempts; ++k) {
        std::mt19937_64 rng(derive_seed(seed_, label, 1, k));
        auto a = random_init(1, sh, rng);
        attempts.push_back({a.to_flat(), false});
      }
    } else if (strategy_ == StrategyId::greedy) {
      for (const auto &cand : greedy_inits(prev->angles))
        push_angles(cand, true);
    } else if (fourier) {
      auto base = fourier_fit(prev->angles).padded().to_flat();
      attempts.push_back({base, false});
      push_perturbed(base);
    } else {
      auto base = interp_extend(prev->angles);
      push_angles(base);
      push_perturbed(base.to_flat());
    }
    break;
  }

  // At p = 1 the anchor is optimized in angle space for every strategy.
  const bool fourier_space = fourier && !anchor;
  Outcome best;
  std::uint64_t level_evals = extra_evals;
  for (const auto &a : attempts) {
    Outcome o = optimize(layout, fourier_space, a);
    if (!anchor)
      level_evals += o.evals;
    if (o.ok && (!best.ok || o.value > best.value))
      best = std::move(o);
  }
  if (anchor) {
    level_evals += best.evals;
    res.attempts = 1;
    res.seeding_attempts = static_cast<int>(attempts.size());
  } else {
    res.attempts = static_cast<int>(attempts.size());
  }
  res.n_c_level = level_evals;

  bool use_best = best.ok;
  if (use_best) {
    res.angles = to_angles(layout, fourier_space, best.x);
    res.expectation = best.value;
    res.ar = approximation_ratio(res.expectation, record_.c_max);
    if (prev && !(res.ar > prev->ar))
      use_best = false;
  }
  if (!use_best) {
    if (prev) {
      res.angles = prev->angles.zero_padded();
      res.expectation = prev->expectation;
      res.ar = prev->ar;
    } else {
      res.angles = layout;
      res.expectation = evaluator_.expectation(layout);
      res.ar = approximation_ratio(res.expectation, record_.c_max);
    }
    res.zero_padded = prev != nullptr;
  }
  res.n_c_cumulative = (prev ? prev->n_c_cumulative : 0) + res.n_c_level;
  if (prev && res.ar < prev->ar)
    state_.monotone = false;
  state_.levels.push_back(std::move(res));
  return state_.last();
}

ProgressionState run_progression(const GraphRecord &g, StrategyId strategy,
                                 int p_max, BudgetRule budget,
                                 std::uint64_t seed,
                                 const ProgressionConfig &config,
                                 std::vector<AngleSet> qaoa_reference,
                                 bool stop_at_target) {
  LayerProgression prog(g, strategy, budget, seed, config,
                        std::move(qaoa_reference));
  while (prog.level() < p_max) {
    prog.step();
    if (stop_at_target && prog.reached_target())
      break;
  }
  return prog.state();
}

} // namespace maqaoa
