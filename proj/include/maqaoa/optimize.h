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
 * Local maximizers with exact accounting of objective evaluations.
 *
 * Every call of the wrapped objective, including finite-difference probes
 * and the final re-evaluation of the returned point, increments n_c.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace maqaoa {

/// Counting wrapper around an angle-vector -> expectation callback.
class Objective {
public:
  using Fn = std::function<double(std::span<const double>)>;

  Objective(Fn fn, std::size_t dimension)
      : fn_(std::move(fn)), dim_(dimension) {}

  double operator()(std::span<const double> x) {
    ++evals_;
    return fn_(x);
  }

  std::size_t dimension() const { return dim_; }
  std::uint64_t evaluations() const { return evals_; }

private:
  Fn fn_;
  std::size_t dim_;
  std::uint64_t evals_ = 0;
};

struct OptimizerResult {
  std::vector<double> best_angles;
  double best_value = 0.0;
  std::uint64_t n_evals = 0;
  bool converged = false;
  /// Set when the objective produced a non-finite value.
  bool aborted = false;
};

struct QuasiNewtonOptions {
  double gradient_tol = 1e-8;
  int max_iter = 1000;
  /// Stop when an accepted step improves the value by less than
  /// ftol * max(|f|, 1).
  double ftol = 1e-12;
  int memory = 10;
  double fd_step = 1e-6;
};

struct SimplexOptions {
  double tol = 1e-8;    ///< spread of values across the simplex
  double xtol = 1e-8;   ///< spread of vertices, max-norm
  int max_iter = 0;     ///< 0 means 200 * dimension
  double step = 0.1;
  double zero_step = 0.00025;
};

/// Limited-memory BFGS ascent with central-difference gradients and a
/// backtracking Armijo line search. The initial point is always a candidate,
/// so the returned value is never below f(x0).
OptimizerResult maximize_quasi_newton(Objective &obj, std::span<const double> x0,
                                      const QuasiNewtonOptions &opts = {});

/// Nelder-Mead on the negated objective. Suitable for stationary starts.
OptimizerResult maximize_simplex(Objective &obj, std::span<const double> x0,
                                 const SimplexOptions &opts = {});

/// Scalar maximization on [lo, hi]: a coarse scan picks the best
/// sub-bracket, then Brent's golden-section/parabolic search refines it.
OptimizerResult maximize_scalar(Objective &obj, double lo, double hi,
                                double xtol = 1e-4, int scan_points = 16);

/// Central-difference gradient, 2 * dim evaluations of `obj`.
std::vector<double> central_gradient(Objective &obj, std::span<const double> x,
                                     double h = 1e-6);

} // namespace maqaoa
