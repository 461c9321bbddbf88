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

#include "rmd/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rmd/dual_state.hpp"
#include "rmd/errors.hpp"
#include "rmd/random.hpp"

namespace rmd {
namespace {

constexpr double kMaxIterations = 1e12;

double lookup(const SparseLine& line, std::size_t index) {
  const auto it = std::lower_bound(line.indices.begin(), line.indices.end(), index);
  if (it == line.indices.end() || *it != index) return 0.0;
  return line.values[static_cast<std::size_t>(it - line.indices.begin())];
}

SimplexPoint frequencies(const std::vector<std::uint64_t>& counts, std::size_t total) {
  std::vector<double> w(counts.size());
  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    w[i] = static_cast<double>(counts[i]) * scale;
  }
  double sum = 0.0;
  for (double v : w) sum += v;
  for (double& v : w) v /= sum;
  return SimplexPoint(std::move(w));
}

bool is_checkpoint(std::size_t k, std::size_t horizon) {
  return k == horizon || (k & (k - 1)) == 0;
}

}  // namespace

std::size_t game_iterations(double epsilon, double sigma, std::size_t rows,
                            std::size_t cols, double entry_bound) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("game_iterations: epsilon must be positive");
  }
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw InvalidArgument("game_iterations: sigma must lie in (0, 1)");
  }
  if (!(entry_bound > 0.0) || !std::isfinite(entry_bound)) {
    throw InvalidArgument("game_iterations: entry bound must be positive");
  }
  const std::size_t dim = std::max(rows, cols);
  if (dim < 2) throw InvalidArgument("game_iterations: need max(rows, cols) >= 2");
  const double n = std::ceil(8.0 * entry_bound * entry_bound *
                             (std::log(static_cast<double>(dim)) + 2.0 * std::log(1.0 / sigma)) /
                             (epsilon * epsilon));
  if (n > kMaxIterations) {
    throw InvalidArgument("game_iterations: iteration count exceeds 1e12");
  }
  return static_cast<std::size_t>(n);
}

GapDetail evaluate_gap(const SparseGameMatrix& a, const SimplexPoint& column,
                       const SimplexPoint& row, ReadCounter& counter,
                       ReadScope scope) {
  if (column.size() != a.cols() || row.size() != a.rows()) {
    throw InvalidArgument("evaluate_gap: strategy sizes do not match the matrix");
  }
  std::vector<double> ax(a.rows(), 0.0);
  std::vector<double> wa(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const SparseLine line = a.row(i, counter, scope);
    for (std::size_t k = 0; k < line.size(); ++k) {
      ax[i] += line.values[k] * column[line.indices[k]];
      wa[line.indices[k]] += row[i] * line.values[k];
    }
  }
  GapDetail d;
  d.upper = *std::max_element(ax.begin(), ax.end());
  d.lower = *std::min_element(wa.begin(), wa.end());
  for (std::size_t i = 0; i < a.rows(); ++i) d.value += row[i] * ax[i];
  return d;
}

double duality_gap(const SparseGameMatrix& a, const SimplexPoint& column,
                   const SimplexPoint& row) {
  ReadCounter counter;
  return evaluate_gap(a, column, row, counter).gap();
}

GameSolution solve_matrix_game(const SparseGameMatrix& a, const GameOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < 2 || n < 2) {
    throw InvalidArgument("solve_matrix_game: need at least 2 rows and 2 columns");
  }
  const double bound = a.entry_bound();
  const std::size_t horizon =
      options.iterations ? *options.iterations
                         : game_iterations(options.epsilon, options.sigma, m, n, bound);
  if (horizon == 0) throw InvalidArgument("solve_matrix_game: iterations must be positive");

  Rng rng(options.seed);
  ReadCounter counter;
  DualState col_state = DualState::Nonadaptive(n, bound, horizon);
  DualState row_state = DualState::Nonadaptive(m, bound, horizon);
  ExpWeightsSampler col_sampler(col_state.y(), col_state.logit_scale());
  ExpWeightsSampler row_sampler(row_state.y(), row_state.logit_scale());
  std::vector<std::uint64_t> col_counts(n, 0);
  std::vector<std::uint64_t> row_counts(m, 0);
  std::vector<double> negated;
  double realized_total = 0.0;

  std::optional<RunTrace> trace;
  if (options.record_trace) {
    trace.emplace(RunMetadata{"md2-game", options.seed, n, horizon, bound}, 0);
  }

  for (std::size_t k = 1; k <= horizon; ++k) {
    const std::size_t i = row_sampler.sample(rng);
    const std::size_t j = col_sampler.sample(rng);
    ++row_counts[i];
    ++col_counts[j];

    const SparseLine row_i = a.row(i, counter, ReadScope::kSolver);
    const SparseLine col_j = a.col(j, counter, ReadScope::kSolver);
    const double realized = lookup(row_i, j);
    realized_total += realized;

    double expected = 0.0;
    if (trace) {
      for (std::size_t t = 0; t < row_i.size(); ++t) {
        expected += row_i.values[t] * col_sampler.probability(row_i.indices[t]);
      }
    }

    // The column player minimizes <e_i, A x>; the row player maximizes
    // <omega, A e_j>, i.e. minimizes its negation.
    col_state.accumulate(SubgradientSample::Sparse(n, row_i.indices, row_i.values, bound));
    for (std::size_t t = 0; t < row_i.size(); ++t) {
      col_sampler.update(row_i.indices[t], col_state.y()[row_i.indices[t]]);
    }
    negated.assign(col_j.values.begin(), col_j.values.end());
    for (double& v : negated) v = -v;
    row_state.accumulate(SubgradientSample::Sparse(m, col_j.indices, negated, bound));
    for (std::size_t t = 0; t < col_j.size(); ++t) {
      row_sampler.update(col_j.indices[t], row_state.y()[col_j.indices[t]]);
    }

    if (trace) {
      StepRecord rec;
      rec.step = k;
      rec.action = j;
      rec.loss = realized;
      rec.expected_loss = expected;
      double norm = 0.0;
      for (double v : row_i.values) norm = std::max(norm, std::abs(v));
      rec.grad_inf_norm = norm;
      rec.dual_checksum = col_state.checksum();
      if (is_checkpoint(k, horizon)) {
        rec.gap = evaluate_gap(a, frequencies(col_counts, k), frequencies(row_counts, k),
                               counter)
                      .gap();
      }
      rec.reads_solver = counter.read(ReadScope::kSolver);
      rec.reads_verify = counter.read(ReadScope::kVerification);
      trace->record(std::move(rec));
    }
  }

  SimplexPoint x_bar = frequencies(col_counts, horizon);
  SimplexPoint w_bar = frequencies(row_counts, horizon);
  const GapDetail detail = evaluate_gap(a, x_bar, w_bar, counter);

  GameSolution s{std::move(x_bar), std::move(w_bar), 0.0, 0.0, 0.0, 0.0, 0.0, 0, 0, 0, 1.0, false, std::nullopt};
  s.gap = detail.gap();
  s.upper_value = detail.upper;
  s.lower_value = detail.lower;
  s.value_estimate = detail.value;
  s.realized_value = realized_total / static_cast<double>(horizon);
  s.iterations = horizon;
  s.elements_read = counter.read(ReadScope::kSolver);
  s.verification_reads = counter.read(ReadScope::kVerification);
  s.entry_bound = bound;
  const double slack = 1e-12 * std::max(1.0, bound);
  s.hannan_holds = detail.lower <= detail.value + slack && detail.value <= detail.upper + slack;
  s.trace = std::move(trace);
  return s;
}

}  // namespace rmd
