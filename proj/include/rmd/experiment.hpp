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

// Configured, repeatable experiment runs behind the CLI and the C API.

#ifndef RMD_EXPERIMENT_HPP_
#define RMD_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rmd {

struct ExperimentConfig {
  // bandit | experts | game | pagerank | sampler-test | bounds
  std::string command;

  std::optional<std::size_t> n;
  std::optional<std::size_t> steps;
  std::uint64_t seed = 0;
  std::size_t repeat = 1;  // runs use seeds seed, seed + 1, ...
  std::size_t threads = 1;
  bool trace = false;      // render the trace of the first run

  // bandit / experts environments
  std::vector<double> means;
  std::string arms_config;
  std::string losses;
  double grad_bound = 1.0;
  std::string adversary = "best-response";  // best-response | bernoulli
  std::string algorithm = "md1";            // md1 | md2 | md2-nonadaptive

  // game / pagerank
  double epsilon = 0.1;
  double sigma = 0.1;
  std::optional<std::size_t> iterations;
  std::optional<double> entry_bound;
  std::string matrix;
  std::size_t rows = 200;
  std::size_t cols = 200;
  std::size_t per_row = 10;
  std::size_t out_degree = 5;
  std::uint64_t matrix_seed = 1;

  // sampler-test
  std::string sampler = "gumbel";  // gumbel | tree | categorical
  std::vector<double> logits;
  double beta = 1.0;
  std::size_t draws = 100000;

  // bounds
  std::optional<std::vector<std::string>> kinds;
  std::vector<double> grad_bounds{1.0};
  std::vector<std::size_t> dims{10};
  std::vector<double> horizons{1000.0, 10000.0, 100000.0};
  std::vector<double> omegas{0.0};

  // Sets a field from its textual value. Keys use dashes ("grad-bound");
  // lists are comma separated. Throws InvalidArgument for unknown keys and
  // malformed values.
  void set(std::string_view key, std::string_view value);
};

// Throws InvalidArgument for an unknown command.
void validate_command(std::string_view command);

struct ExperimentResult {
  std::string summary_json;  // deterministic: no timestamps or thread counts
  std::string trace_csv;     // empty unless requested
  std::string table_csv;     // bounds only
  std::uint64_t summary_hash = 0;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace rmd

#endif  // RMD_EXPERIMENT_HPP_
