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

#include "rmd/bandits.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "rmd/dual_state.hpp"
#include "rmd/errors.hpp"

namespace rmd {

BanditRun run_bandit(LossSequence& environment, std::size_t horizon,
                     std::uint64_t seed) {
  const std::size_t n = environment.dimension();
  if (n < 2) throw InvalidArgument("run_bandit: need at least 2 arms");
  if (horizon == 0) throw InvalidArgument("run_bandit: horizon must be positive");
  if (environment.bound() > 1.0) {
    throw InvalidArgument("run_bandit: losses must lie in [0, 1]");
  }

  const double m_eff = effective_bandit_m(n);
  const std::optional<std::vector<double>> means = environment.mean_losses();

  Rng rng(seed);
  DualState state = DualState::Adaptive(n, m_eff);
  SimplexPoint x = md1_point(state);
  RunTrace trace({"md1-bandit", seed, n, horizon, m_eff});
  std::vector<double> realized_sums(n, 0.0);
  std::vector<std::size_t> actions;
  actions.reserve(horizon);
  double algorithm_loss = 0.0;
  double max_norm = 0.0;

  for (std::size_t k = 1; k <= horizon; ++k) {
    const std::vector<double> loss =
        environment.next_checked({k, x, std::span<const std::size_t>(actions)});
    const std::size_t arm = sample_categorical(x.weights(), rng);
    const double observed = loss[arm];
    if (observed < 0.0) throw ContractViolation("run_bandit: negative loss");

    const std::vector<double>& basis = means ? *means : loss;
    const double expected =
        std::inner_product(basis.begin(), basis.end(), x.weights().begin(), 0.0);
    algorithm_loss += expected;
    for (std::size_t i = 0; i < n; ++i) realized_sums[i] += loss[i];

    SubgradientSample estimate = bandit_gradient_estimate(x, {arm, observed, k});
    max_norm = std::max(max_norm, estimate.inf_norm());

    StepRecord rec;
    rec.step = k;
    rec.action = arm;
    rec.loss = observed;
    rec.expected_loss = expected;
    rec.grad_inf_norm = estimate.inf_norm();
    if (trace.keeps_distributions()) rec.distribution = x.vector();

    Md1Step next = md1_step(std::move(state), estimate);
    state = std::move(next.state);
    x = std::move(next.next);
    rec.dual_checksum = state.checksum();
    trace.record(std::move(rec));
    actions.push_back(arm);
  }

  std::vector<double> comparator = realized_sums;
  if (means) {
    for (std::size_t i = 0; i < n; ++i) {
      comparator[i] = (*means)[i] * static_cast<double>(horizon);
    }
  }
  const double bound =
      evaluate_bound({BoundKind::kT1Mean, m_eff, n, static_cast<double>(horizon), 0.0, {}});
  return {make_regret_report(algorithm_loss, comparator, horizon, n, m_eff, bound,
                             to_string(BoundKind::kT1Mean)),
          std::move(trace), max_norm};
}

}  // namespace rmd
