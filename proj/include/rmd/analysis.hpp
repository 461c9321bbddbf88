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

// Regret accounting, regret-bound evaluators, statistical helpers and run
// traces.

#ifndef RMD_ANALYSIS_HPP_
#define RMD_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmd/simplex.hpp"

namespace rmd {

// ---------------------------------------------------------------------------
// Run traces

struct RunMetadata {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  std::size_t horizon = 0;
  double grad_bound = 0.0;
};

struct StepRecord {
  std::size_t step = 0;  // 1-based, contiguous
  std::size_t action = 0;
  // Loss actually incurred by the realized play.
  double loss = 0.0;
  // Loss averaged over the learner's own sampling distribution at this step
  // (equals `loss` for deterministic plays).
  double expected_loss = 0.0;
  double grad_inf_norm = 0.0;
  double dual_checksum = 0.0;
  // Duality gap of the running averages; only set on game checkpoints.
  std::optional<double> gap;
  // Cumulative matrix reads after this step.
  std::uint64_t reads_solver = 0;
  std::uint64_t reads_verify = 0;
  // Played point / sampling distribution; elided beyond the memory budget.
  std::optional<std::vector<double>> distribution;
};

class RunTrace {
 public:
  // Per-step distributions are stored while n * N stays within
  // `distribution_budget` doubles.
  static constexpr std::size_t kDefaultDistributionBudget = 1u << 20;

  explicit RunTrace(RunMetadata meta,
                    std::size_t distribution_budget = kDefaultDistributionBudget);

  const RunMetadata& metadata() const { return meta_; }
  bool keeps_distributions() const { return keep_distributions_; }

  // Appends the next record; throws InvalidState unless record.step equals
  // size() + 1 and the horizon is not yet reached. Drops the distribution when
  // the trace elides them.
  void record(StepRecord record);

  std::size_t size() const { return records_.size(); }
  bool complete() const { return records_.size() == meta_.horizon; }
  const std::vector<StepRecord>& records() const { return records_; }
  const StepRecord& back() const { return records_.back(); }

 private:
  RunMetadata meta_;
  bool keep_distributions_;
  std::vector<StepRecord> records_;
};

// ---------------------------------------------------------------------------
// Regret

enum class LossBasis { kRealized, kExpected };

// Mean per-step algorithm loss minus min(comparator) / N. `comparator` holds
// per-coordinate loss sums over the N steps. Throws InvalidState for an
// incomplete trace and InvalidArgument for a comparator of the wrong length.
double pseudo_regret(const RunTrace& trace, std::span<const double> comparator,
                     LossBasis basis = LossBasis::kRealized);

struct RegretReport {
  double algorithm_loss = 0.0;   // summed over N steps
  double comparator_loss = 0.0;  // min_i of summed coordinate losses
  double pseudo_regret = 0.0;    // (algorithm_loss - comparator_loss) / N
  double bound = 0.0;            // per-step theorem bound for this run
  std::string bound_kind;
  std::size_t horizon = 0;
  std::size_t dimension = 0;
  double grad_bound = 0.0;
};

RegretReport make_regret_report(double algorithm_loss,
                                std::span<const double> comparator_sums,
                                std::size_t horizon, std::size_t dimension,
                                double grad_bound, double bound,
                                std::string bound_kind);

// ---------------------------------------------------------------------------
// Bounds

enum class BoundKind {
  kT1Mean,              // 2M sqrt(ln n / N)
  kT1HighProb,          // (2M/sqrt N)(sqrt(ln n) + sqrt(8 Omega))
  kT2Mean,              // 2M sqrt(ln n / N)
  kT2HighProbGeneral,   // (2M/sqrt N)(sqrt(ln n) + sqrt(18 Omega))
  kT2HighProbDet,       // (2M/sqrt N)(sqrt(ln n) + sqrt(2 Omega))
  kT2NonadaptiveDet,    // (sqrt2 M/sqrt N)(sqrt(ln n) + 2 sqrt(Omega))
  kR9Product,           // (2M/sqrt N)(sqrt(max d * sum d ln n_j) + sum d sqrt(8 Omega))
};

std::string to_string(BoundKind kind);
// Accepts the identifiers printed by to_string ("T1-mean", ...).
BoundKind parse_bound_kind(const std::string& id);
std::vector<BoundKind> all_bound_kinds();

struct BoundSpec {
  BoundKind kind = BoundKind::kT1Mean;
  double grad_bound = 1.0;   // M
  std::size_t dimension = 2; // n (unused by kR9Product)
  double horizon = 1.0;      // N
  double omega = 0.0;        // confidence level: probability exp(-omega)
  std::vector<SimplexBlock> blocks;  // kR9Product only
};

// Per-step bound value; throws InvalidArgument on invalid parameters.
double evaluate_bound(const BoundSpec& spec);

// ---------------------------------------------------------------------------
// Statistics

struct HighProbResult {
  bool pass = false;
  double exceedance_fraction = 0.0;
  double allowed_fraction = 0.0;
  std::size_t exceedances = 0;
};

// Passes iff the fraction of values above `bound` is at most
// sigma + 2 sqrt(sigma (1 - sigma) / m). Requires at least 10 values and
// sigma in [0, 1].
HighProbResult highprob_check(std::span<const double> values, double bound,
                              double sigma);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Pearson goodness of fit. Adjacent cells are merged until every expected
// count reaches 5. Requires at least 1000 observations and at least two
// merged cells.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                               const SimplexPoint& expected);

// 64-bit FNV-1a of a byte string; used to fingerprint JSON summaries.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace rmd

#endif  // RMD_ANALYSIS_HPP_
