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

#include "rmd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "rmd/errors.hpp"

namespace rmd {

RunTrace::RunTrace(RunMetadata meta, std::size_t distribution_budget)
    : meta_(std::move(meta)) {
  const double cells =
      static_cast<double>(meta_.dimension) * static_cast<double>(meta_.horizon);
  keep_distributions_ = cells <= static_cast<double>(distribution_budget);
  records_.reserve(meta_.horizon);
}

void RunTrace::record(StepRecord record) {
  if (records_.size() >= meta_.horizon) {
    throw InvalidState("RunTrace: horizon of " + std::to_string(meta_.horizon) +
                       " steps already recorded");
  }
  if (record.step != records_.size() + 1) {
    throw InvalidState("RunTrace: expected step " +
                       std::to_string(records_.size() + 1) + ", got " +
                       std::to_string(record.step));
  }
  if (!keep_distributions_) record.distribution.reset();
  records_.push_back(std::move(record));
}

double pseudo_regret(const RunTrace& trace, std::span<const double> comparator,
                     LossBasis basis) {
  if (!trace.complete()) {
    throw InvalidState("pseudo_regret: trace has " + std::to_string(trace.size()) +
                       " of " + std::to_string(trace.metadata().horizon) + " steps");
  }
  if (comparator.size() != trace.metadata().dimension || comparator.empty()) {
    throw InvalidArgument("pseudo_regret: comparator length does not match dimension");
  }
  double total = 0.0;
  for (const auto& r : trace.records()) {
    total += basis == LossBasis::kRealized ? r.loss : r.expected_loss;
  }
  const double best = *std::min_element(comparator.begin(), comparator.end());
  const double n_steps = static_cast<double>(trace.metadata().horizon);
  return (total - best) / n_steps;
}

RegretReport make_regret_report(double algorithm_loss,
                                std::span<const double> comparator_sums,
                                std::size_t horizon, std::size_t dimension,
                                double grad_bound, double bound,
                                std::string bound_kind) {
  if (comparator_sums.empty() || horizon == 0) {
    throw InvalidArgument("make_regret_report: empty comparator or horizon");
  }
  RegretReport r;
  r.algorithm_loss = algorithm_loss;
  r.comparator_loss = *std::min_element(comparator_sums.begin(), comparator_sums.end());
  r.pseudo_regret = (r.algorithm_loss - r.comparator_loss) / static_cast<double>(horizon);
  r.bound = bound;
  r.bound_kind = std::move(bound_kind);
  r.horizon = horizon;
  r.dimension = dimension;
  r.grad_bound = grad_bound;
  return r;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kT1Mean: return "T1-mean";
    case BoundKind::kT1HighProb: return "T1-highprob";
    case BoundKind::kT2Mean: return "T2-mean";
    case BoundKind::kT2HighProbGeneral: return "T2-highprob-general";
    case BoundKind::kT2HighProbDet: return "T2-highprob-det";
    case BoundKind::kT2NonadaptiveDet: return "T2-nonadaptive-det";
    case BoundKind::kR9Product: return "R9-product";
  }
  return "unknown";
}

std::vector<BoundKind> all_bound_kinds() {
  return {BoundKind::kT1Mean,          BoundKind::kT1HighProb,
          BoundKind::kT2Mean,          BoundKind::kT2HighProbGeneral,
          BoundKind::kT2HighProbDet,   BoundKind::kT2NonadaptiveDet,
          BoundKind::kR9Product};
}

BoundKind parse_bound_kind(const std::string& id) {
  for (BoundKind k : all_bound_kinds()) {
    if (to_string(k) == id) return k;
  }
  throw InvalidArgument("unknown bound kind '" + id + "'");
}

double evaluate_bound(const BoundSpec& spec) {
  const double m = spec.grad_bound;
  const double n_steps = spec.horizon;
  const double omega = spec.omega;
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("evaluate_bound: M must be positive");
  if (!(n_steps > 0.0) || !std::isfinite(n_steps)) {
    throw InvalidArgument("evaluate_bound: N must be positive");
  }
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument("evaluate_bound: Omega must be nonnegative");
  }
  const double root_n = std::sqrt(n_steps);

  if (spec.kind == BoundKind::kR9Product) {
    ProductSimplexSpec product(spec.blocks);
    double weighted_log = 0.0;
    for (const auto& b : product.blocks()) {
      weighted_log += b.mass * std::log(static_cast<double>(b.size));
    }
    if (!(weighted_log > 0.0)) {
      throw InvalidArgument("evaluate_bound: R9 needs a block with at least 2 coordinates");
    }
    return (2.0 * m / root_n) *
           (std::sqrt(product.max_mass() * weighted_log) +
            product.total_mass() * std::sqrt(8.0 * omega));
  }

  if (spec.dimension < 2) throw InvalidArgument("evaluate_bound: n must be at least 2");
  const double root_log_n = std::sqrt(std::log(static_cast<double>(spec.dimension)));
  switch (spec.kind) {
    case BoundKind::kT1Mean:
    case BoundKind::kT2Mean:
      return 2.0 * m * root_log_n / root_n;
    case BoundKind::kT1HighProb:
      return (2.0 * m / root_n) * (root_log_n + std::sqrt(8.0 * omega));
    case BoundKind::kT2HighProbGeneral:
      return (2.0 * m / root_n) * (root_log_n + std::sqrt(18.0 * omega));
    case BoundKind::kT2HighProbDet:
      return (2.0 * m / root_n) * (root_log_n + std::sqrt(2.0 * omega));
    case BoundKind::kT2NonadaptiveDet:
      return (std::sqrt(2.0) * m / root_n) * (root_log_n + 2.0 * std::sqrt(omega));
    case BoundKind::kR9Product:
      break;
  }
  throw InvalidArgument("evaluate_bound: unknown bound kind");
}

HighProbResult highprob_check(std::span<const double> values, double bound,
                              double sigma) {
  if (values.size() < 10) {
    throw InvalidArgument("highprob_check: need at least 10 seeds, got " +
                          std::to_string(values.size()));
  }
  if (!(sigma >= 0.0 && sigma <= 1.0)) {
    throw InvalidArgument("highprob_check: sigma must lie in [0, 1]");
  }
  HighProbResult r;
  for (double v : values) {
    if (v > bound) ++r.exceedances;
  }
  const double m = static_cast<double>(values.size());
  r.exceedance_fraction = static_cast<double>(r.exceedances) / m;
  r.allowed_fraction = sigma + 2.0 * std::sqrt(sigma * (1.0 - sigma) / m);
  r.pass = r.exceedance_fraction <= r.allowed_fraction;
  return r;
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                               const SimplexPoint& expected) {
  if (counts.size() != expected.size()) {
    throw InvalidArgument("chi_square_gof: counts and distribution differ in length");
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total < 1000) {
    throw InvalidArgument("chi_square_gof: need at least 1000 observations");
  }
  const double scale = static_cast<double>(total) / expected.mass();

  struct Cell {
    double observed;
    double expected;
  };
  std::vector<Cell> cells;
  Cell acc{0.0, 0.0};
  for (std::size_t i = 0; i < counts.size(); ++i) {
    acc.observed += static_cast<double>(counts[i]);
    acc.expected += expected[i] * scale;
    if (acc.expected >= 5.0) {
      cells.push_back(acc);
      acc = {0.0, 0.0};
    }
  }
  if (acc.observed > 0.0 || acc.expected > 0.0) {
    if (cells.empty()) {
      cells.push_back(acc);
    } else {
      cells.back().observed += acc.observed;
      cells.back().expected += acc.expected;
    }
  }
  if (cells.size() < 2) {
    throw InvalidArgument("chi_square_gof: expected distribution is degenerate");
  }

  ChiSquareResult r;
  for (const auto& c : cells) {
    const double d = c.observed - c.expected;
    r.statistic += d * d / c.expected;
  }
  r.degrees_of_freedom = cells.size() - 1;
  r.p_value = boost::math::gamma_q(0.5 * static_cast<double>(r.degrees_of_freedom),
                                   0.5 * r.statistic);
  return r;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace rmd
