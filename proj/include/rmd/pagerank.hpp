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

// Stationary vector of a row-stochastic matrix via the matrix game with
// A = P^T - I (value 0, entries in [-1, 1]).

#ifndef RMD_PAGERANK_HPP_
#define RMD_PAGERANK_HPP_

#include "rmd/matrix_game.hpp"
#include "rmd/simplex.hpp"
#include "rmd/sparse_matrix.hpp"

namespace rmd {

inline constexpr double kStochasticTolerance = 1e-9;

// Throws InvalidArgument unless P is square, nonnegative, and every row sums
// to 1 within `tolerance`.
void validate_row_stochastic(const SparseGameMatrix& p,
                             double tolerance = kStochasticTolerance);

// P^T - I with declared entry bound 1.
SparseGameMatrix stationarity_game(const SparseGameMatrix& p);

struct PageRankResult {
  SimplexPoint ranking;
  // max_i ((P^T - I) x)_i for the returned x; <= epsilon with probability
  // at least 1 - sigma.
  double residual = 0.0;
  GameSolution game;
};

PageRankResult pagerank_via_game(const SparseGameMatrix& p,
                                 const GameOptions& options);

}  // namespace rmd

#endif  // RMD_PAGERANK_HPP_
