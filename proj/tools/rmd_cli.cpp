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

// Command-line front end. Talks to the library only through the C API.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rmd/c_api.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

struct Subcommand {
  CLI::App* app = nullptr;
  std::string name;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::vector<std::unique_ptr<std::string>> values;

  void add(const std::string& key, const std::string& help, const std::string& flag = "") {
    values.push_back(std::make_unique<std::string>());
    const std::string spelled = flag.empty() ? "--" + key : flag;
    options.emplace_back(key, app->add_option(spelled, *values.back(), help));
  }
};

struct Outputs {
  std::string output;
  std::string trace;
};

int exit_code(rmd_status status) {
  switch (status) {
    case RMD_OK: return kExitOk;
    case RMD_ERR_CONTRACT: return kExitContract;
    case RMD_ERR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  return static_cast<bool>(out);
}

int fail(rmd_status status) {
  std::cerr << "rmd: " << rmd_status_name(status) << ": " << rmd_last_error() << '\n';
  return exit_code(status);
}

int run(const Subcommand& sub, const Outputs& io) {
  rmd_experiment* e = nullptr;
  rmd_status st = rmd_experiment_create(sub.name.c_str(), &e);
  if (st != RMD_OK) return fail(st);
  for (std::size_t i = 0; i < sub.options.size() && st == RMD_OK; ++i) {
    if (sub.options[i].second->count() > 0) {
      st = rmd_experiment_set_string(e, sub.options[i].first.c_str(), sub.values[i]->c_str());
    }
  }
  if (st == RMD_OK && !io.trace.empty()) st = rmd_experiment_set_int(e, "trace", 1);
  rmd_result* r = nullptr;
  if (st == RMD_OK) st = rmd_experiment_run(e, &r);
  rmd_experiment_destroy(e);
  if (st != RMD_OK) return fail(st);

  int code = kExitOk;
  const bool table = sub.name == "bounds";
  if (!write_text(io.output, table ? rmd_result_table_csv(r) : rmd_result_summary_json(r))) {
    std::cerr << "rmd: cannot write '" << io.output << "'\n";
    code = kExitUsage;
  }
  if (code == kExitOk && !io.trace.empty() && !write_text(io.trace, rmd_result_trace_csv(r))) {
    std::cerr << "rmd: cannot write '" << io.trace << "'\n";
    code = kExitUsage;
  }
  if (code == kExitOk) {
    std::fprintf(stderr, "summary-hash %016" PRIx64 "\n", rmd_result_summary_hash(r));
  }
  rmd_result_destroy(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized mirror descent: bandits, experts and sparse matrix games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rmd_version()));

  Outputs io;
  std::vector<Subcommand> subs;
  subs.reserve(6);
  auto make = [&](const std::string& name, const std::string& help) -> Subcommand& {
    Subcommand& s = subs.emplace_back();
    s.name = name;
    s.app = app.add_subcommand(name, help);
    s.app->add_option("-o,--output", io.output, "Write the result here (default: stdout)");
    if (name != "bounds" && name != "sampler-test") {
      s.app->add_option("--trace", io.trace, "Write the per-step trace CSV of the first run");
    }
    if (name != "bounds") {
      s.add("seed", "Seed of the first run");
      s.add("repeat", "Number of runs with consecutive seeds");
      s.add("threads", "Runs executed concurrently");
    }
    return s;
  };

  Subcommand& bandit = make("bandit", "MD1 with importance-weighted bandit feedback");
  bandit.add("n", "Number of arms for the default environment", "--arms,--n");
  bandit.add("steps", "Horizon N");
  bandit.add("means", "Comma-separated Bernoulli loss means");
  bandit.add("arms-config", "JSON file {\"means\": [...], \"seed\": k}");

  Subcommand& experts = make("experts", "Prediction with expert advice");
  experts.add("n", "Number of experts", "--n,--experts");
  experts.add("steps", "Horizon N");
  experts.add("losses", "CSV file with one loss vector per line");
  experts.add("grad-bound", "Bound M on |loss|");
  experts.add("adversary", "best-response | bernoulli");
  experts.add("algorithm", "md1 | md2 | md2-nonadaptive");
  experts.add("means", "Loss means for the bernoulli adversary");
  experts.add("sigma", "Confidence for the high-probability check");

  Subcommand& game = make("game", "Sublinear randomized matrix-game solver");
  game.add("matrix", "Matrix Market file (default: random sparse matrix)");
  game.add("entry-bound", "Declared bound M on |a_ij|");
  game.add("epsilon", "Target duality gap");
  game.add("sigma", "Failure probability");
  game.add("iterations", "Override the iteration count");
  game.add("rows", "Rows of the random matrix");
  game.add("cols", "Columns of the random matrix");
  game.add("per-row", "Nonzeros per row of the random matrix");
  game.add("matrix-seed", "Seed of the random matrix");

  Subcommand& pagerank = make("pagerank", "Stationary vector of a row-stochastic matrix");
  pagerank.add("matrix", "Matrix Market transition matrix (default: random link graph)");
  pagerank.add("n", "Nodes of the random link graph", "--nodes,--n");
  pagerank.add("out-degree", "Out-degree of the random link graph");
  pagerank.add("matrix-seed", "Seed of the random link graph");
  pagerank.add("epsilon", "Target residual");
  pagerank.add("sigma", "Failure probability");
  pagerank.add("iterations", "Override the iteration count");

  Subcommand& sampler = make("sampler-test", "Chi-square test of a softmax sampler");
  sampler.add("sampler", "gumbel | tree | categorical");
  sampler.add("logits", "Comma-separated logits y");
  sampler.add("n", "Number of default logits");
  sampler.add("beta", "Temperature");
  sampler.add("draws", "Samples per run");

  Subcommand& bounds = make("bounds", "Tabulate regret bounds");
  bounds.add("kinds", "Comma-separated bound kinds");
  bounds.add("grad-bounds", "Values of M");
  bounds.add("dims", "Values of n");
  bounds.add("horizons", "Values of N");
  bounds.add("omegas", "Values of Omega");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const Subcommand& s : subs) {
    if (s.app->parsed()) return run(s, io);
  }
  return kExitUsage;
}
