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

// JSON and CSV renderings of run results.

#ifndef RMD_REPORT_IO_HPP_
#define RMD_REPORT_IO_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmd/analysis.hpp"
#include "rmd/matrix_game.hpp"

namespace rmd {

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

nlohmann::json to_json(const RegretReport& report);
// Strategies are included only when both have at most `max_strategy_size`
// entries.
nlohmann::json to_json(const GameSolution& solution,
                       std::size_t max_strategy_size = 1000);

inline constexpr const char* kTraceHeader =
    "k,loss,action,gap_if_game,reads_solver,reads_verify";

// One line per step under kTraceHeader; gap_if_game is empty off checkpoints.
std::string trace_csv(const RunTrace& trace);

struct BoundTableRequest {
  std::vector<BoundKind> kinds;
  std::vector<double> grad_bounds;
  std::vector<std::size_t> dimensions;
  std::vector<double> horizons;
  std::vector<double> omegas;
};

inline constexpr const char* kBoundTableHeader = "kind,M,n,N,omega,bound";

// Header plus one row per element of the Cartesian product, in the order
// kind, M, n, N, omega (last varies fastest). Any empty list yields the
// header alone. kR9Product is rejected since it needs block sizes.
std::string emit_bound_table(const BoundTableRequest& request);

}  // namespace rmd

#endif  // RMD_REPORT_IO_HPP_
