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

#include "rmd/pagerank.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rmd/errors.hpp"

namespace rmd {

void validate_row_stochastic(const SparseGameMatrix& p, double tolerance) {
  if (p.rows() != p.cols()) {
    throw InvalidArgument("pagerank: transition matrix must be square");
  }
  std::vector<double> sums(p.rows(), 0.0);
  for (const MatrixEntry& e : p.entries()) {
    if (e.value < 0.0) {
      throw InvalidArgument("pagerank: negative transition probability at (" +
                            std::to_string(e.row) + ", " + std::to_string(e.col) + ")");
    }
    sums[e.row] += e.value;
  }
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (std::abs(sums[i] - 1.0) > tolerance) {
      throw InvalidArgument("pagerank: row " + std::to_string(i) + " sums to " +
                            std::to_string(sums[i]));
    }
  }
}

SparseGameMatrix stationarity_game(const SparseGameMatrix& p) {
  validate_row_stochastic(p);
  std::vector<MatrixEntry> entries;
  entries.reserve(p.nonzeros() + p.rows());
  for (const MatrixEntry& e : p.entries()) entries.push_back({e.col, e.row, e.value});
  for (std::size_t i = 0; i < p.rows(); ++i) entries.push_back({i, i, -1.0});
  return SparseGameMatrix(p.rows(), p.cols(), std::move(entries), 1.0);
}

PageRankResult pagerank_via_game(const SparseGameMatrix& p, const GameOptions& options) {
  const SparseGameMatrix a = stationarity_game(p);
  GameSolution game = solve_matrix_game(a, options);
  SimplexPoint ranking = game.column_strategy;
  const double residual = game.upper_value;
  return {std::move(ranking), residual, std::move(game)};
}

}  // namespace rmd
