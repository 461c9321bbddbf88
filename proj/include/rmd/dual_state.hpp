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

// Dual-averaging state and the two steppers built on it.
//
// MD1 plays the prox point x^{t+1} = grad W_{beta_{t+1}}(y^t) directly.
// MD2 plays a vertex of the simplex drawn from that same exponential-weights
// distribution (adaptive schedule) or from softmax(gamma y) when the horizon
// N is known in advance (nonadaptive schedule, beta == 1).

#ifndef RMD_DUAL_STATE_HPP_
#define RMD_DUAL_STATE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rmd/random.hpp"
#include "rmd/simplex.hpp"
#include "rmd/subgradient.hpp"

namespace rmd {

enum class ScheduleMode { kAdaptive, kNonadaptive };

class DualState {
 public:
  // Fresh state y = 0, t = 0. n >= 2 and grad_bound > 0 are required.
  static DualState Adaptive(std::size_t n, double grad_bound);
  static DualState Nonadaptive(std::size_t n, double grad_bound,
                               std::size_t horizon);

  // y <- y - g, t <- t + 1. Throws InvalidArgument on a dimension mismatch
  // and InvalidState when a nonadaptive state would exceed its horizon.
  void accumulate(const SubgradientSample& grad);

  std::span<const double> y() const { return y_; }
  std::size_t steps() const { return steps_; }
  std::size_t dimension() const { return y_.size(); }
  double grad_bound() const { return grad_bound_; }
  ScheduleMode mode() const { return mode_; }
  std::optional<std::size_t> horizon() const { return horizon_; }

  // Multiplier applied to y to obtain the logits of the next play:
  // 1 / beta_{t+1} (adaptive) or gamma (nonadaptive).
  double logit_scale() const;

  // Sum of y; a cheap fingerprint recorded in traces.
  double checksum() const;

 private:
  DualState(std::size_t n, double grad_bound, ScheduleMode mode,
            std::optional<std::size_t> horizon);

  std::vector<double> y_;
  std::size_t steps_ = 0;
  double grad_bound_;
  ScheduleMode mode_;
  std::optional<std::size_t> horizon_;
};

struct Md1Step {
  DualState state;
  SimplexPoint next;
};

// One MD1 step with gamma == 1: accumulates the gradient and returns the
// point played next, softmax_prox(y', adaptive_beta(t' + 1, M, n)).
// Requires an adaptive state.
Md1Step md1_step(DualState state, const SubgradientSample& grad);

// The point MD1 plays from `state` (x^1 = uniform for a fresh state).
SimplexPoint md1_point(const DualState& state);

// Distribution MD2 samples its next vertex from.
SimplexPoint md2_distribution(const DualState& state);

struct Md2Draw {
  std::size_t index;
  SimplexPoint distribution;
};

// Draws vertex i with probability md2_distribution(state)_i.
Md2Draw md2_sample(const DualState& state, Rng& rng);

// argmax_i (y_i + zeta_i) with zeta_i i.i.d. Gumbel of scale beta, drawn as
// -beta ln(-ln U). The index law equals softmax_prox(y, beta). Ties go to the
// lowest index.
std::size_t gumbel_argmax_sample(std::span<const double> y, double beta,
                                 Rng& rng);

// Exponential-weights sampler with O(log n) draws and O(log n) per-coordinate
// updates, for the nonadaptive MD2 schedule where only a few coordinates of y
// change per step and the logit scale is constant.
//
// Weights are kept as exp(scale * (y_i - offset)) in a sum tree; the offset
// is moved (with an O(n) rebuild) when a logit drifts outside a safe range.
class ExpWeightsSampler {
 public:
  ExpWeightsSampler(std::span<const double> y, double scale);

  // Refreshes coordinate i after y_i changed.
  void update(std::size_t i, double y_i);

  std::size_t sample(Rng& rng) const;
  double probability(std::size_t i) const;
  std::size_t size() const { return n_; }
  std::size_t rebuilds() const { return rebuilds_; }

 private:
  void rebuild();
  void set_leaf(std::size_t i, double w);

  std::size_t n_;
  std::size_t leaves_;
  double scale_;
  double offset_ = 0.0;
  std::vector<double> y_;
  std::vector<double> tree_;
  std::size_t rebuilds_ = 0;
};

}  // namespace rmd

#endif  // RMD_DUAL_STATE_HPP_
