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

// Adversarial / stochastic multi-armed bandits solved with MD1 and the
// importance-weighted loss estimator.

#ifndef RMD_BANDITS_HPP_
#define RMD_BANDITS_HPP_

#include <cstddef>
#include <cstdint>

#include "rmd/analysis.hpp"
#include "rmd/environments.hpp"

namespace rmd {

struct BanditRun {
  RegretReport report;
  RunTrace trace;
  // Largest ||estimate||_inf fed to the learner; the estimator is not clipped.
  double max_estimate_norm = 0.0;
};

// Runs MD1 with gradient bound sqrt(2n) on `environment` (losses in [0, 1]).
// Each step samples an arm from x^k, reveals only that arm's loss and feeds
// loss / x^k_arm back. The report is pseudo-regret: per-step algorithm loss
// <mu, x^k> against the best mean for stochastic environments, <l^k, x^k>
// against the best realized column sum otherwise. Bound: T1-mean with
// M = sqrt(2n).
BanditRun run_bandit(LossSequence& environment, std::size_t horizon,
                     std::uint64_t seed);

}  // namespace rmd

#endif  // RMD_BANDITS_HPP_
