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

#include "rmd/experts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "rmd/errors.hpp"

namespace rmd {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void check_horizon(std::size_t n, std::size_t horizon, const char* who,
                   std::size_t min_experts = 2) {
  if (n < min_experts) {
    throw InvalidArgument(std::string(who) + ": need at least " +
                          std::to_string(min_experts) + " experts");
  }
  if (horizon == 0) throw InvalidArgument(std::string(who) + ": horizon must be positive");
}

void validate_problem(const ExpertProblem& p) {
  if (!p.strategies || !p.nature || !p.loss) {
    throw InvalidArgument("ExpertProblem: strategies, nature and loss are required");
  }
  if (!(p.loss_bound > 0.0) || !std::isfinite(p.loss_bound)) {
    throw InvalidArgument("ExpertProblem: loss bound must be positive");
  }
}

// Turns an expert problem into per-expert loss vectors. Nature only sees the
// weights handed over in the step context.
class InducedLosses final : public LossSequence {
 public:
  explicit InducedLosses(const ExpertProblem& p) : p_(p) {}

  std::size_t dimension() const override { return p_.experts; }
  double bound() const override { return p_.loss_bound; }
  std::string kind() const override { return "expert-problem"; }

  std::vector<double> next_loss(const StepContext& ctx) override {
    zeta_ = p_.strategies(ctx.step);
    if (zeta_.size() != p_.experts) {
      throw InvalidArgument("ExpertProblem: strategies returned " +
                            std::to_string(zeta_.size()) + " experts");
    }
    for (const auto& z : zeta_) {
      if (z.size() != zeta_.front().size() || z.empty()) {
        throw InvalidArgument("ExpertProblem: strategies differ in dimension");
      }
    }
    omega_ = p_.nature(ctx.step, ctx.distribution.weights());
    std::vector<double> l(p_.experts);
    for (std::size_t i = 0; i < p_.experts; ++i) l[i] = p_.loss(omega_, zeta_[i]);
    return l;
  }

  const std::vector<std::vector<double>>& strategies() const { return zeta_; }
  const std::vector<double>& omega() const { return omega_; }

 private:
  const ExpertProblem& p_;
  std::vector<std::vector<double>> zeta_;
  std::vector<double> omega_;
};

ExpertsRun run_md2(LossSequence& losses, std::size_t horizon, std::uint64_t seed,
                   ScheduleMode mode) {
  const std::size_t n = losses.dimension();
  check_horizon(n, horizon, "run_experts_nonconvex");
  const double m = losses.bound();
  Rng rng(seed);
  DualState state = mode == ScheduleMode::kAdaptive
                        ? DualState::Adaptive(n, m)
                        : DualState::Nonadaptive(n, m, horizon);
  RunTrace trace({mode == ScheduleMode::kAdaptive ? "md2" : "md2-nonadaptive", seed,
                  n, horizon, m});
  std::vector<double> sums(n, 0.0);
  std::vector<std::size_t> actions;
  actions.reserve(horizon);
  double algorithm_loss = 0.0;

  for (std::size_t k = 1; k <= horizon; ++k) {
    const SimplexPoint p = md2_distribution(state);
    const std::vector<double> l = losses.next_checked({k, p, actions});
    const std::size_t i = sample_categorical(p.weights(), rng);
    algorithm_loss += l[i];
    for (std::size_t j = 0; j < n; ++j) sums[j] += l[j];

    const SubgradientSample g = full_info_gradient(l, m);
    StepRecord rec;
    rec.step = k;
    rec.action = i;
    rec.loss = l[i];
    rec.expected_loss = dot(l, p.weights());
    rec.grad_inf_norm = g.inf_norm();
    if (trace.keeps_distributions()) rec.distribution = p.vector();
    state.accumulate(g);
    rec.dual_checksum = state.checksum();
    trace.record(std::move(rec));
    actions.push_back(i);
  }
  const double bound =
      evaluate_bound({BoundKind::kT2Mean, m, n, static_cast<double>(horizon), 0.0, {}});
  return {make_regret_report(algorithm_loss, sums, horizon, n, m, bound,
                             to_string(BoundKind::kT2Mean)),
          std::move(trace)};
}

}  // namespace

ExpertsRun run_experts_linear(LossSequence& losses, std::size_t horizon,
                              std::uint64_t seed) {
  const std::size_t n = losses.dimension();
  check_horizon(n, horizon, "run_experts_linear");
  const double m = losses.bound();
  DualState state = DualState::Adaptive(n, m);
  SimplexPoint x = md1_point(state);
  RunTrace trace({"md1", seed, n, horizon, m});
  std::vector<double> sums(n, 0.0);
  double algorithm_loss = 0.0;

  for (std::size_t k = 1; k <= horizon; ++k) {
    const std::vector<double> l = losses.next_checked({k, x, {}});
    const double incurred = dot(l, x.weights());
    algorithm_loss += incurred;
    for (std::size_t j = 0; j < n; ++j) sums[j] += l[j];

    const SubgradientSample g = full_info_gradient(l, m);
    StepRecord rec;
    rec.step = k;
    rec.action = static_cast<std::size_t>(
        std::max_element(x.weights().begin(), x.weights().end()) - x.weights().begin());
    rec.loss = incurred;
    rec.expected_loss = incurred;
    rec.grad_inf_norm = g.inf_norm();
    if (trace.keeps_distributions()) rec.distribution = x.vector();
    Md1Step next = md1_step(std::move(state), g);
    state = std::move(next.state);
    x = std::move(next.next);
    rec.dual_checksum = state.checksum();
    trace.record(std::move(rec));
  }
  const double bound =
      evaluate_bound({BoundKind::kT1Mean, m, n, static_cast<double>(horizon), 0.0, {}});
  return {make_regret_report(algorithm_loss, sums, horizon, n, m, bound,
                             to_string(BoundKind::kT1Mean)),
          std::move(trace)};
}

ConvexExpertsRun run_experts_convex(const ExpertProblem& problem,
                                    std::size_t horizon, std::uint64_t seed) {
  validate_problem(problem);
  const std::size_t n = problem.experts;
  check_horizon(n, horizon, "run_experts_convex", 1);
  const double m = problem.loss_bound;
  InducedLosses losses(problem);
  // A lone expert is always played in full.
  std::optional<DualState> state;
  if (n >= 2) state.emplace(DualState::Adaptive(n, m));
  SimplexPoint x = state ? md1_point(*state) : SimplexPoint::Uniform(1);

  ConvexExpertsRun out{{}, {}, RunTrace({"md1-convex", seed, n, horizon, m}), {}, {}, {}, {}};
  out.surrogate_path.reserve(horizon);
  out.realized_path.reserve(horizon);
  std::vector<double> sums(n, 0.0);
  double surrogate_loss = 0.0;
  double realized_loss = 0.0;

  for (std::size_t k = 1; k <= horizon; ++k) {
    std::vector<double> l = losses.next_checked({k, x, {}});
    const auto& zeta = losses.strategies();
    std::vector<double> play(zeta.front().size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < play.size(); ++d) play[d] += x[i] * zeta[i][d];
    }
    const double surrogate = dot(l, x.weights());
    const double realized = problem.loss(losses.omega(), play);
    surrogate_loss += surrogate;
    realized_loss += realized;
    for (std::size_t j = 0; j < n; ++j) sums[j] += l[j];
    const double best = *std::min_element(sums.begin(), sums.end());
    out.surrogate_path.push_back(surrogate_loss - best);
    out.realized_path.push_back(realized_loss - best);

    const SubgradientSample g = full_info_gradient(l, m);
    StepRecord rec;
    rec.step = k;
    rec.action = static_cast<std::size_t>(
        std::max_element(x.weights().begin(), x.weights().end()) - x.weights().begin());
    rec.loss = realized;
    rec.expected_loss = surrogate;
    rec.grad_inf_norm = g.inf_norm();
    if (out.trace.keeps_distributions()) rec.distribution = x.vector();
    if (state) {
      Md1Step next = md1_step(std::move(*state), g);
      state.emplace(std::move(next.state));
      x = std::move(next.next);
      rec.dual_checksum = state->checksum();
    }
    out.trace.record(std::move(rec));
    out.induced_losses.push_back(std::move(l));
    out.plays.push_back(std::move(play));
  }
  const double bound =
      state ? evaluate_bound({BoundKind::kT1Mean, m, n, static_cast<double>(horizon), 0.0, {}})
            : 0.0;
  out.surrogate = make_regret_report(surrogate_loss, sums, horizon, n, m, bound,
                                     to_string(BoundKind::kT1Mean));
  out.realized = make_regret_report(realized_loss, sums, horizon, n, m, bound,
                                    to_string(BoundKind::kT1Mean));
  return out;
}

ExpertsRun run_experts_nonconvex(const ExpertProblem& problem, std::size_t horizon,
                                 std::uint64_t seed, ScheduleMode mode) {
  validate_problem(problem);
  InducedLosses losses(problem);
  return run_md2(losses, horizon, seed, mode);
}

ExpertsRun run_experts_nonconvex(LossSequence& losses, std::size_t horizon,
                                 std::uint64_t seed, ScheduleMode mode) {
  return run_md2(losses, horizon, seed, mode);
}

}  // namespace rmd
