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

// Prediction with expert advice.
//
//  * linear losses: deterministic MD1 on the loss vectors;
//  * convex losses lambda(omega, zeta): play the mixture sum x_i zeta_i and
//    run MD1 on the linear surrogate f(x) = sum x_i lambda(omega, zeta_i);
//  * non-convex losses: MD2, i.e. follow one expert drawn from the
//    exponential-weights distribution.

#ifndef RMD_EXPERTS_HPP_
#define RMD_EXPERTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rmd/analysis.hpp"
#include "rmd/dual_state.hpp"
#include "rmd/environments.hpp"

namespace rmd {

struct ExpertsRun {
  RegretReport report;
  RunTrace trace;
};

// Deterministic MD1 with gradient bound losses.bound(); the loss of step k is
// <l^k, x^k>. Requires n >= 2. Bound: T1-mean.
ExpertsRun run_experts_linear(LossSequence& losses, std::size_t horizon,
                              std::uint64_t seed = 0);

// Experts propose strategies zeta_i^k in a convex set; nature answers with
// omega^k after seeing our weights (never a realized draw).
struct ExpertProblem {
  std::size_t experts = 0;
  double loss_bound = 1.0;  // |lambda| <= loss_bound
  std::function<std::vector<std::vector<double>>(std::size_t step)> strategies;
  std::function<std::vector<double>(std::size_t step, std::span<const double> weights)>
      nature;
  std::function<double(std::span<const double> omega, std::span<const double> zeta)>
      loss;
};

struct ConvexExpertsRun {
  // Regret of the linear surrogate (what MD1 controls); bound T1-mean.
  RegretReport surrogate;
  // Regret of the realized losses lambda(omega^k, x^k) against the best
  // expert; never larger than the surrogate when lambda is convex.
  RegretReport realized;
  RunTrace trace;
  // Cumulative (unnormalized) regrets after each step.
  std::vector<double> surrogate_path;
  std::vector<double> realized_path;
  // l_i^k = lambda(omega^k, zeta_i^k), one row per step.
  std::vector<std::vector<double>> induced_losses;
  // The mixed strategies sum_i x_i zeta_i^k.
  std::vector<std::vector<double>> plays;
};

// A single expert is accepted; it is always played and its regret is 0.
ConvexExpertsRun run_experts_convex(const ExpertProblem& problem,
                                    std::size_t horizon, std::uint64_t seed = 0);

// MD2 over expert indices with full-information updates. The report uses
// realized losses l^k_{i_k} of the drawn experts; bound T2-mean.
ExpertsRun run_experts_nonconvex(const ExpertProblem& problem,
                                 std::size_t horizon, std::uint64_t seed,
                                 ScheduleMode mode = ScheduleMode::kAdaptive);

// Same with the per-expert losses supplied directly.
ExpertsRun run_experts_nonconvex(LossSequence& losses, std::size_t horizon,
                                 std::uint64_t seed,
                                 ScheduleMode mode = ScheduleMode::kAdaptive);

}  // namespace rmd

#endif  // RMD_EXPERTS_HPP_
