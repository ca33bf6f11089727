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

#include "maqaoa/optimize.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace maqaoa {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double inf_norm(std::span<const double> a) {
  double m = 0.0;
  for (double v : a)
    m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(std::span<const double> a) {
  return std::all_of(a.begin(), a.end(),
                     [](double v) { return std::isfinite(v); });
}

struct Correction {
  std::vector<double> s, y;
  double rho;
};

// Re-evaluates the chosen point (counted) unless the initial point is better.
OptimizerResult finish(Objective &obj, std::uint64_t start,
                       std::vector<double> x, double fx,
                       std::span<const double> x0, double f0, bool converged,
                       bool aborted) {
  OptimizerResult res;
  if (!(fx >= f0)) {
    x.assign(x0.begin(), x0.end());
  }
  res.best_value = obj(x);
  res.best_angles = std::move(x);
  res.n_evals = obj.evaluations() - start;
  res.converged = converged;
  res.aborted = aborted || !std::isfinite(res.best_value);
  return res;
}

} // namespace

std::vector<double> central_gradient(Objective &obj, std::span<const double> x,
                                     double h) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    double up = obj(probe);
    probe[i] = x[i] - h;
    double down = obj(probe);
    probe[i] = x[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

OptimizerResult maximize_quasi_newton(Objective &obj, std::span<const double> x0,
                                      const QuasiNewtonOptions &opts) {
  const std::size_t d = x0.size();
  if (d == 0 || d != obj.dimension())
    throw std::invalid_argument("quasi-Newton: dimension mismatch");
  const std::uint64_t start = obj.evaluations();
  std::vector<double> x(x0.begin(), x0.end());
  double fx = obj(x);
  const double f0 = fx;
  if (!std::isfinite(fx))
    return finish(obj, start, x, fx, x0, f0, false, true);

  auto grad = central_gradient(obj, x, opts.fd_step);
  if (!all_finite(grad))
    return finish(obj, start, x, fx, x0, f0, false, true);

  std::deque<Correction> memory;
  std::vector<double> dir(d), x_new(d), alpha_buf;
  bool converged = false;
  bool aborted = false;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (inf_norm(grad) < opts.gradient_tol) {
      converged = true;
      break;
    }

    // Two-loop recursion on the ascent direction.
    dir = grad;
    alpha_buf.assign(memory.size(), 0.0);
    for (std::size_t k = memory.size(); k-- > 0;) {
      alpha_buf[k] = memory[k].rho * dot(memory[k].s, dir);
      for (std::size_t i = 0; i < d; ++i)
        dir[i] -= alpha_buf[k] * memory[k].y[i];
    }
    double scale = 1.0;
    if (!memory.empty()) {
      const auto &last = memory.back();
      scale = dot(last.s, last.y) / dot(last.y, last.y);
    } else {
      scale = 1.0 / std::max(1.0, std::sqrt(dot(grad, grad)));
    }
    for (double &v : dir)
      v *= scale;
    for (std::size_t k = 0; k < memory.size(); ++k) {
      double b = memory[k].rho * dot(memory[k].y, dir);
      for (std::size_t i = 0; i < d; ++i)
        dir[i] += memory[k].s[i] * (alpha_buf[k] - b);
    }
    double slope = dot(grad, dir);
    if (!(slope > 0.0)) {
      memory.clear();
      double g2 = std::sqrt(dot(grad, grad));
      for (std::size_t i = 0; i < d; ++i)
        dir[i] = grad[i] / std::max(1.0, g2);
      slope = dot(grad, dir);
    }

    // Backtracking Armijo search.
    double step = 1.0;
    double f_new = fx;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (std::size_t i = 0; i < d; ++i)
        x_new[i] = x[i] + step * dir[i];
      f_new = obj(x_new);
      if (!std::isfinite(f_new)) {
        aborted = true;
        break;
      }
      if (f_new >= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (aborted || !accepted)
      break;

    auto grad_new = central_gradient(obj, x_new, opts.fd_step);
    if (!all_finite(grad_new)) {
      aborted = true;
      x = x_new;
      fx = f_new;
      break;
    }
    Correction c{std::vector<double>(d), std::vector<double>(d), 0.0};
    for (std::size_t i = 0; i < d; ++i) {
      c.s[i] = x_new[i] - x[i];
      // Curvature pair of the minimized function -f.
      c.y[i] = grad[i] - grad_new[i];
    }
    double sy = dot(c.s, c.y);
    if (sy > 1e-14 * std::sqrt(dot(c.s, c.s) * dot(c.y, c.y))) {
      c.rho = 1.0 / sy;
      memory.push_back(std::move(c));
      if (static_cast<int>(memory.size()) > opts.memory)
        memory.pop_front();
    }
    const double gain = f_new - fx;
    x = x_new;
    fx = f_new;
    grad = std::move(grad_new);
    if (gain <= opts.ftol * std::max(std::abs(fx), 1.0)) {
      converged = inf_norm(grad) < std::sqrt(opts.gradient_tol);
      break;
    }
  }
  return finish(obj, start, std::move(x), fx, x0, f0, converged, aborted);
}

OptimizerResult maximize_simplex(Objective &obj, std::span<const double> x0,
                                 const SimplexOptions &opts) {
  const std::size_t d = x0.size();
  if (d == 0 || d != obj.dimension())
    throw std::invalid_argument("simplex: dimension mismatch");
  const int max_iter = opts.max_iter > 0 ? opts.max_iter
                                         : 200 * static_cast<int>(d);
  const std::uint64_t start = obj.evaluations();
  const std::uint64_t max_evals = start + 2ull * max_iter;

  // Minimize h = -f.
  std::vector<std::vector<double>> pts(d + 1,
                                       std::vector<double>(x0.begin(), x0.end()));
  std::vector<double> h(d + 1);
  for (std::size_t i = 0; i < d; ++i)
    pts[i + 1][i] += (x0[i] != 0.0) ? opts.step : opts.zero_step;

  bool aborted = false;
  const double f0 = obj(pts[0]);
  h[0] = -f0;
  if (!std::isfinite(f0))
    return finish(obj, start, pts[0], f0, x0, f0, false, true);
  for (std::size_t i = 1; i <= d && !aborted; ++i) {
    h[i] = -obj(pts[i]);
    aborted = !std::isfinite(h[i]);
  }

  std::vector<std::size_t> order(d + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> h2;
    for (auto k : order) {
      p2.push_back(std::move(pts[k]));
      h2.push_back(h[k]);
    }
    pts = std::move(p2);
    h = std::move(h2);
  };

  std::vector<double> centroid(d), xr(d), xe(d), xc(d);
  auto blend = [&](std::vector<double> &out, double t) {
    // out = centroid + t * (centroid - worst)
    for (std::size_t i = 0; i < d; ++i)
      out[i] = centroid[i] + t * (centroid[i] - pts[d][i]);
  };
  auto eval = [&](const std::vector<double> &x) {
    double v = -obj(x);
    if (!std::isfinite(v))
      aborted = true;
    return v;
  };

  bool converged = false;
  for (int iter = 0; iter < max_iter && !aborted; ++iter) {
    sort_simplex();
    double fspread = 0.0, xspread = 0.0;
    for (std::size_t k = 1; k <= d; ++k) {
      fspread = std::max(fspread, std::abs(h[k] - h[0]));
      for (std::size_t i = 0; i < d; ++i)
        xspread = std::max(xspread, std::abs(pts[k][i] - pts[0][i]));
    }
    if (fspread <= opts.tol && xspread <= opts.xtol) {
      converged = true;
      break;
    }
    if (obj.evaluations() >= max_evals)
      break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i)
        centroid[i] += pts[k][i] / static_cast<double>(d);

    blend(xr, 1.0);
    double hr = eval(xr);
    if (aborted)
      break;
    if (hr < h[0]) {
      blend(xe, 2.0);
      double he = eval(xe);
      if (aborted)
        break;
      if (he < hr) {
        pts[d] = xe;
        h[d] = he;
      } else {
        pts[d] = xr;
        h[d] = hr;
      }
      continue;
    }
    if (hr < h[d - 1]) {
      pts[d] = xr;
      h[d] = hr;
      continue;
    }
    bool outside = hr < h[d];
    blend(xc, outside ? 0.5 : -0.5);
    double hc = eval(xc);
    if (aborted)
      break;
    if (hc <= (outside ? hr : h[d])) {
      pts[d] = xc;
      h[d] = hc;
      continue;
    }
    // Shrink towards the best vertex.
    for (std::size_t k = 1; k <= d && !aborted; ++k) {
      for (std::size_t i = 0; i < d; ++i)
        pts[k][i] = pts[0][i] + 0.5 * (pts[k][i] - pts[0][i]);
      h[k] = eval(pts[k]);
    }
  }
  std::size_t best = static_cast<std::size_t>(
      std::min_element(h.begin(), h.end()) - h.begin());
  return finish(obj, start, pts[best], -h[best], x0, f0, converged, aborted);
}

OptimizerResult maximize_scalar(Objective &obj, double lo, double hi,
                                double xtol, int scan_points) {
  if (!(lo < hi))
    throw std::invalid_argument("scalar maximization needs lo < hi");
  if (obj.dimension() != 1)
    throw std::invalid_argument("scalar maximization needs a 1-D objective");
  const std::uint64_t start = obj.evaluations();
  auto f = [&](double x) {
    double v = obj(std::span<const double>(&x, 1));
    return std::isfinite(v) ? v : -HUGE_VAL;
  };

  scan_points = std::max(scan_points, 2);
  const double width = (hi - lo) / (scan_points - 1);
  double best_x = lo, best_f = -HUGE_VAL;
  int best_k = 0;
  for (int k = 0; k < scan_points; ++k) {
    double x = (k == scan_points - 1) ? hi : lo + k * width;
    double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
      best_k = k;
    }
  }

  // Brent's method on -f over the neighbouring sub-bracket.
  double a = lo + std::max(best_k - 1, 0) * width;
  double b = std::min(hi, lo + (best_k + 1) * width);
  const double golden = 0.3819660112501051;
  double x = best_x, w = best_x, v = best_x;
  double fx = -best_f, fw = fx, fv = fx;
  double step = 0.0, prev_step = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    const double tol1 = xtol * 0.5;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a))
      break;
    bool parabolic = false;
    if (std::abs(prev_step) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0)
        p = -p;
      q = std::abs(q);
      double last = prev_step;
      prev_step = step;
      if (std::abs(p) < std::abs(0.5 * q * last) && p > q * (a - x) &&
          p < q * (b - x)) {
        step = p / q;
        double u = x + step;
        if (u - a < tol2 || b - u < tol2)
          step = (mid > x) ? tol1 : -tol1;
        parabolic = true;
      }
    }
    if (!parabolic) {
      prev_step = (x >= mid) ? a - x : b - x;
      step = golden * prev_step;
    }
    double u = (std::abs(step) >= tol1) ? x + step
                                        : x + (step > 0 ? tol1 : -tol1);
    double fu = -f(u);
    if (fu <= fx) {
      if (u >= x)
        a = x;
      else
        b = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  if (-fx > best_f) {
    best_f = -fx;
    best_x = x;
  }
  OptimizerResult res;
  res.best_angles = {best_x};
  res.best_value = obj(res.best_angles);
  res.n_evals = obj.evaluations() - start;
  res.converged = true;
  res.aborted = !std::isfinite(res.best_value);
  return res;
}

} // namespace maqaoa
