// Copyright 2026 The rmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rmd/dual_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rmd/errors.hpp"
#include "rmd/schedule.hpp"

namespace rmd {
namespace {

// Logits are kept in [-kLogitWindow, kLogitWindow] relative to the offset.
constexpr double kLogitWindow = 64.0;

}  // namespace

DualState::DualState(std::size_t n, double grad_bound, ScheduleMode mode,
                     std::optional<std::size_t> horizon)
    : y_(n, 0.0), grad_bound_(grad_bound), mode_(mode), horizon_(horizon) {
  if (n < 2) throw InvalidArgument("DualState: dimension must be at least 2");
  if (!(grad_bound > 0.0) || !std::isfinite(grad_bound)) {
    throw InvalidArgument("DualState: gradient bound must be positive");
  }
}

DualState DualState::Adaptive(std::size_t n, double grad_bound) {
  return DualState(n, grad_bound, ScheduleMode::kAdaptive, std::nullopt);
}

DualState DualState::Nonadaptive(std::size_t n, double grad_bound,
                                 std::size_t horizon) {
  if (horizon == 0) throw InvalidArgument("DualState: horizon must be positive");
  return DualState(n, grad_bound, ScheduleMode::kNonadaptive, horizon);
}

void DualState::accumulate(const SubgradientSample& grad) {
  if (grad.dimension() != y_.size()) {
    throw InvalidArgument("DualState::accumulate: gradient has dimension " +
                          std::to_string(grad.dimension()) + ", state has " +
                          std::to_string(y_.size()));
  }
  if (horizon_ && steps_ >= *horizon_) {
    throw InvalidState("DualState::accumulate: horizon of " +
                       std::to_string(*horizon_) + " steps exhausted");
  }
  grad.for_each_entry([this](std::size_t i, double v) { y_[i] -= v; });
  ++steps_;
}

double DualState::logit_scale() const {
  if (mode_ == ScheduleMode::kAdaptive) {
    return 1.0 / adaptive_beta(steps_ + 1, grad_bound_, y_.size());
  }
  return nonadaptive_gamma(static_cast<double>(*horizon_), grad_bound_, y_.size());
}

double DualState::checksum() const {
  double s = 0.0;
  for (double v : y_) s += v;
  return s;
}

SimplexPoint md1_point(const DualState& state) {
  if (state.mode() != ScheduleMode::kAdaptive) {
    throw InvalidArgument("md1: requires the adaptive schedule");
  }
  return softmax_prox(state.y(),
                      adaptive_beta(state.steps() + 1, state.grad_bound(),
                                    state.dimension()));
}

Md1Step md1_step(DualState state, const SubgradientSample& grad) {
  if (state.mode() != ScheduleMode::kAdaptive) {
    throw InvalidArgument("md1_step: requires the adaptive schedule");
  }
  state.accumulate(grad);
  SimplexPoint next = md1_point(state);
  return Md1Step{std::move(state), std::move(next)};
}

SimplexPoint md2_distribution(const DualState& state) {
  if (state.mode() == ScheduleMode::kAdaptive) {
    return softmax_prox(state.y(),
                        adaptive_beta(state.steps() + 1, state.grad_bound(),
                                      state.dimension()));
  }
  const double gamma = state.logit_scale();
  std::vector<double> logits(state.y().begin(), state.y().end());
  for (double& v : logits) v *= gamma;
  return softmax_prox(logits, 1.0);
}

Md2Draw md2_sample(const DualState& state, Rng& rng) {
  SimplexPoint p = md2_distribution(state);
  const std::size_t i = sample_categorical(p.weights(), rng);
  return Md2Draw{i, std::move(p)};
}

std::size_t gumbel_argmax_sample(std::span<const double> y, double beta,
                                 Rng& rng) {
  if (y.empty()) throw InvalidArgument("gumbel_argmax_sample: empty input");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("gumbel_argmax_sample: beta must be positive");
  }
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!std::isfinite(y[i])) {
      throw InvalidArgument("gumbel_argmax_sample: non-finite coordinate");
    }
    const double zeta = -beta * std::log(-std::log(rng.uniform_open()));
    const double v = y[i] + zeta;
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  return best;
}

ExpWeightsSampler::ExpWeightsSampler(std::span<const double> y, double scale)
    : n_(y.size()), leaves_(1), scale_(scale), y_(y.begin(), y.end()) {
  if (n_ == 0) throw InvalidArgument("ExpWeightsSampler: empty input");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("ExpWeightsSampler: scale must be positive");
  }
  while (leaves_ < n_) leaves_ *= 2;
  tree_.assign(2 * leaves_, 0.0);
  rebuild();
}

void ExpWeightsSampler::rebuild() {
  offset_ = *std::max_element(y_.begin(), y_.end());
  for (std::size_t i = 0; i < n_; ++i) {
    tree_[leaves_ + i] = std::exp(scale_ * (y_[i] - offset_));
  }
  for (std::size_t node = leaves_ - 1; node >= 1; --node) {
    tree_[node] = tree_[2 * node] + tree_[2 * node + 1];
  }
  ++rebuilds_;
}

void ExpWeightsSampler::set_leaf(std::size_t i, double w) {
  std::size_t node = leaves_ + i;
  tree_[node] = w;
  for (node /= 2; node >= 1; node /= 2) {
    tree_[node] = tree_[2 * node] + tree_[2 * node + 1];
  }
}

void ExpWeightsSampler::update(std::size_t i, double y_i) {
  if (i >= n_) throw InvalidArgument("ExpWeightsSampler::update: index out of range");
  y_[i] = y_i;
  const double logit = scale_ * (y_i - offset_);
  if (logit > kLogitWindow) {
    rebuild();
    return;
  }
  set_leaf(i, std::exp(logit));
  if (tree_[1] < std::exp(-kLogitWindow)) rebuild();
}

std::size_t ExpWeightsSampler::sample(Rng& rng) const {
  double target = rng.uniform_open() * tree_[1];
  std::size_t node = 1;
  while (node < leaves_) {
    const std::size_t left = 2 * node;
    if (target < tree_[left] || tree_[left + 1] <= 0.0) {
      node = left;
    } else {
      target -= tree_[left];
      node = left + 1;
    }
  }
  return node - leaves_;
}

double ExpWeightsSampler::probability(std::size_t i) const {
  if (i >= n_) throw InvalidArgument("ExpWeightsSampler::probability: index out of range");
  return tree_[leaves_ + i] / tree_[1];
}

}  // namespace rmd
