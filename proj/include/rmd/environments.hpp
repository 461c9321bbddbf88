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

// Loss sequences and feedback oracles.
//
// Everything is phrased as losses to be minimized. A loss sequence sees the
// distribution the learner is about to sample from (or the point it is about
// to play) but is asked for the loss *before* any draw of the current step
// happens, so it can never condition on the realized vertex.

#ifndef RMD_ENVIRONMENTS_HPP_
#define RMD_ENVIRONMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmd/random.hpp"
#include "rmd/simplex.hpp"
#include "rmd/subgradient.hpp"

namespace rmd {

// What an adaptive adversary may look at when choosing the loss of step k.
struct StepContext {
  std::size_t step;  // 1-based
  // x^k for MD1 runs, p^k for MD2/bandit runs.
  const SimplexPoint& distribution;
  // Realized actions of steps 1..k-1 (empty for MD1 full-information runs).
  std::span<const std::size_t> past_actions;
};

class LossSequence {
 public:
  virtual ~LossSequence() = default;

  virtual std::size_t dimension() const = 0;
  // Declared bound M on the infinity norm of every emitted loss vector.
  virtual double bound() const = 0;
  virtual std::string kind() const = 0;

  // Emits l^k. Callers go through next_checked() which enforces the bound.
  virtual std::vector<double> next_loss(const StepContext& ctx) = 0;

  // Per-coordinate expected losses when the sequence is i.i.d. stochastic.
  virtual std::optional<std::vector<double>> mean_losses() const {
    return std::nullopt;
  }

  // next_loss() followed by a dimension and ||l||_inf <= M check; throws
  // ContractViolation on failure.
  std::vector<double> next_checked(const StepContext& ctx);
};

// Replays a fixed list; step k returns rows[k-1]. Running past the end
// throws InvalidState.
class FixedListLosses final : public LossSequence {
 public:
  FixedListLosses(std::vector<std::vector<double>> rows, double bound);

  std::size_t dimension() const override { return dimension_; }
  double bound() const override { return bound_; }
  std::string kind() const override { return "fixed-list"; }
  std::vector<double> next_loss(const StepContext& ctx) override;
  std::size_t length() const { return rows_.size(); }

 private:
  std::vector<std::vector<double>> rows_;
  std::size_t dimension_;
  double bound_;
};

// Independent Bernoulli losses with the given means (values in {0, 1}).
// Uses its own RNG stream so the learner's draws do not perturb it.
class BernoulliArms final : public LossSequence {
 public:
  BernoulliArms(std::vector<double> means, std::uint64_t seed);

  std::size_t dimension() const override { return means_.size(); }
  double bound() const override { return 1.0; }
  std::string kind() const override { return "bernoulli"; }
  std::vector<double> next_loss(const StepContext& ctx) override;
  std::optional<std::vector<double>> mean_losses() const override {
    return means_;
  }

 private:
  std::vector<double> means_;
  Rng rng_;
};

// Loss `magnitude` on the highest-weight coordinate of the current
// distribution (ties to the lowest index), 0 elsewhere.
class BestResponseAdversary final : public LossSequence {
 public:
  BestResponseAdversary(std::size_t n, double magnitude = 1.0);

  std::size_t dimension() const override { return n_; }
  double bound() const override { return magnitude_; }
  std::string kind() const override { return "best-response"; }
  std::vector<double> next_loss(const StepContext& ctx) override;

 private:
  std::size_t n_;
  double magnitude_;
};

// Gradient of the linear loss <l, x>: l itself, certified by `bound`.
SubgradientSample full_info_gradient(std::span<const double> loss, double bound);

struct BanditFeedback {
  std::size_t arm;
  double loss;  // in [0, 1]
  std::size_t step;
};

// Importance-weighted estimate: loss / p_arm on the pulled arm, zero
// elsewhere. Its declared bound is loss / p_arm (it may exceed the
// environment's M). Unbiased for the full loss vector.
SubgradientSample bandit_gradient_estimate(const SimplexPoint& p,
                                           const BanditFeedback& feedback);

// sqrt(2n), the gradient bound fed into bandit schedules.
double effective_bandit_m(std::size_t n);

// One loss vector per line, comma separated. Blank lines and lines starting
// with '#' are skipped. Throws IoError / InvalidArgument.
FixedListLosses load_loss_csv(const std::string& path, double bound);

struct ArmsConfig {
  std::vector<double> means;
  std::optional<std::uint64_t> seed;
};

// {"means": [0.4, 0.5, ...], "seed": 7}; "seed" is optional.
ArmsConfig read_arms_config(const std::string& path);

// BernoulliArms from such a file. The seed defaults to
// `default_seed` when absent.
BernoulliArms load_arms_config(const std::string& path,
                               std::uint64_t default_seed);

}  // namespace rmd

#endif  // RMD_ENVIRONMENTS_HPP_
