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

// Randomized sublinear solver for zero-sum matrix games.
//
// The row player (maximizer over omega) and the column player (minimizer over
// x) both run nonadaptive MD2 on the payoff <omega, A x>. Each step samples a
// row i and a column j, after which the column player accumulates row i of A
// and the row player accumulates column j, so a step reads
// nnz(row i) + nnz(col j) entries. The returned strategies are the empirical
// frequencies of the sampled pure plays.

#ifndef RMD_MATRIX_GAME_HPP_
#define RMD_MATRIX_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rmd/analysis.hpp"
#include "rmd/simplex.hpp"
#include "rmd/sparse_matrix.hpp"

namespace rmd {

struct GameOptions {
  double epsilon = 0.1;
  double sigma = 0.1;
  std::uint64_t seed = 0;
  // Overrides the iteration count derived from epsilon and sigma.
  std::optional<std::size_t> iterations;
  bool record_trace = false;
};

struct GapDetail {
  double upper = 0.0;  // max_i (A x)_i
  double lower = 0.0;  // min_j (omega^T A)_j
  double value = 0.0;  // <omega, A x>
  double gap() const { return upper - lower; }
};

struct GameSolution {
  SimplexPoint column_strategy;  // x-bar
  SimplexPoint row_strategy;     // omega-bar
  double gap = 0.0;
  double upper_value = 0.0;
  double lower_value = 0.0;
  double value_estimate = 0.0;   // <omega-bar, A x-bar>
  double realized_value = 0.0;   // (1/N) sum a_{i_k j_k}
  std::size_t iterations = 0;
  std::uint64_t elements_read = 0;       // solver scope
  std::uint64_t verification_reads = 0;  // gap evaluation scope
  double entry_bound = 1.0;
  // lower <= value_estimate <= upper.
  bool hannan_holds = false;
  std::optional<RunTrace> trace;
};

// ceil(8 M^2 (ln max(rows, cols) + 2 ln(1/sigma)) / epsilon^2): the M = 1
// count applied to A / M with target epsilon / M.
std::size_t game_iterations(double epsilon, double sigma, std::size_t rows,
                            std::size_t cols, double entry_bound = 1.0);

// Throws InvalidArgument for epsilon <= 0, sigma outside (0, 1), or a matrix
// with fewer than 2 rows or columns.
GameSolution solve_matrix_game(const SparseGameMatrix& a,
                               const GameOptions& options);

// One full pass over the nonzeros (counted under `scope`).
GapDetail evaluate_gap(const SparseGameMatrix& a, const SimplexPoint& column,
                       const SimplexPoint& row, ReadCounter& counter,
                       ReadScope scope = ReadScope::kVerification);

// max_i (A x)_i - min_j (omega^T A)_j >= 0.
double duality_gap(const SparseGameMatrix& a, const SimplexPoint& column,
                   const SimplexPoint& row);

}  // namespace rmd

#endif  // RMD_MATRIX_GAME_HPP_
