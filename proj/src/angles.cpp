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

#include "maqaoa/angles.h"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace maqaoa {

AngleSet AngleSet::shared(int p) {
  if (p < 0)
    throw DimensionError("negative layer count");
  AngleSet a;
  a.kind_ = AngleKind::shared;
  a.p_ = p;
  a.gamma_.assign(p, 0.0);
  a.beta_.assign(p, 0.0);
  return a;
}

AngleSet AngleSet::per_term(int p, int num_edges, int num_qubits) {
  if (p < 0 || num_edges < 0 || num_qubits < 1)
    throw DimensionError("invalid per-term angle shape");
  AngleSet a;
  a.kind_ = AngleKind::per_term;
  a.p_ = p;
  a.gw_ = num_edges;
  a.bw_ = num_qubits;
  a.gamma_.assign(static_cast<std::size_t>(p) * num_edges, 0.0);
  a.beta_.assign(static_cast<std::size_t>(p) * num_qubits, 0.0);
  return a;
}

AngleSet AngleSet::shared(std::vector<double> gammas, std::vector<double> betas) {
  if (gammas.size() != betas.size())
    throw DimensionError("gamma and beta layer counts differ");
  AngleSet a = shared(static_cast<int>(gammas.size()));
  a.gamma_ = std::move(gammas);
  a.beta_ = std::move(betas);
  return a;
}

std::vector<double> AngleSet::to_flat() const {
  std::vector<double> flat;
  flat.reserve(size());
  for (int l = 0; l < p_; ++l) {
    auto g = gamma(l);
    auto b = beta(l);
    flat.insert(flat.end(), g.begin(), g.end());
    flat.insert(flat.end(), b.begin(), b.end());
  }
  return flat;
}

void AngleSet::assign_flat(std::span<const double> flat) {
  if (flat.size() != size())
    throw DimensionError("flat angle vector has " + std::to_string(flat.size()) +
                         " entries, expected " + std::to_string(size()));
  auto it = flat.begin();
  for (int l = 0; l < p_; ++l) {
    auto g = gamma(l);
    std::copy(it, it + gw_, g.begin());
    it += gw_;
    auto b = beta(l);
    std::copy(it, it + bw_, b.begin());
    it += bw_;
  }
}

AngleSet AngleSet::with_flat(std::span<const double> flat) const {
  AngleSet out = *this;
  out.assign_flat(flat);
  return out;
}

AngleSet AngleSet::with_zero_layer(int pos) const {
  if (pos < 0 || pos > p_)
    throw DimensionError("zero-layer position out of range");
  AngleSet out = *this;
  out.p_ = p_ + 1;
  out.gamma_.insert(out.gamma_.begin() + static_cast<std::ptrdiff_t>(pos) * gw_,
                    gw_, 0.0);
  out.beta_.insert(out.beta_.begin() + static_cast<std::ptrdiff_t>(pos) * bw_,
                   bw_, 0.0);
  return out;
}

AngleSet AngleSet::broadcast(int num_edges, int num_qubits) const {
  if (kind_ != AngleKind::shared)
    throw DimensionError("broadcast expects a shared angle set");
  AngleSet out = per_term(p_, num_edges, num_qubits);
  for (int l = 0; l < p_; ++l) {
    auto g = out.gamma(l);
    std::fill(g.begin(), g.end(), gamma_[l]);
    auto b = out.beta(l);
    std::fill(b.begin(), b.end(), beta_[l]);
  }
  return out;
}

std::string AngleSet::to_json() const {
  std::string out = "[";
  char buf[40];
  bool first = true;
  for (double x : to_flat()) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    if (!first)
      out += ',';
    out += buf;
    first = false;
  }
  out += ']';
  return out;
}

AngleSet AngleSet::from_json(const std::string &text, AngleKind kind, int p,
                             int num_edges, int num_qubits) {
  auto flat = nlohmann::json::parse(text).get<std::vector<double>>();
  AngleSet a = kind == AngleKind::shared ? shared(p)
                                         : per_term(p, num_edges, num_qubits);
  a.assign_flat(flat);
  return a;
}

} // namespace maqaoa
