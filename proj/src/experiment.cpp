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

#include "rmd/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <future>
#include <memory>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "rmd/analysis.hpp"
#include "rmd/bandits.hpp"
#include "rmd/dual_state.hpp"
#include "rmd/environments.hpp"
#include "rmd/errors.hpp"
#include "rmd/experts.hpp"
#include "rmd/matrix_game.hpp"
#include "rmd/pagerank.hpp"
#include "rmd/random.hpp"
#include "rmd/report_io.hpp"
#include "rmd/simplex.hpp"
#include "rmd/sparse_matrix.hpp"

namespace rmd {
namespace {

using nlohmann::json;

constexpr std::string_view kCommands[] = {"bandit", "experts", "game",
                                          "pagerank", "sampler-test", "bounds"};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  if (trim(value).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.find(',', start);
    out.push_back(trim(value.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  T v{};
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw InvalidArgument("invalid value '" + std::string(text) + "' for " +
                          std::string(key));
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(v)) {
      throw InvalidArgument("non-finite value for " + std::string(key));
    }
  }
  return v;
}

template <class T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_number<T>(key, item));
  return out;
}

std::size_t positive(std::string_view key, std::string_view text) {
  const auto v = parse_number<std::size_t>(key, text);
  if (v == 0) throw InvalidArgument(std::string(key) + " must be positive");
  return v;
}

double positive_real(std::string_view key, std::string_view text) {
  const double v = parse_number<double>(key, text);
  if (!(v > 0.0)) throw InvalidArgument(std::string(key) + " must be positive");
  return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Runs f(i) for i in [0, repeat), at most `threads` at a time; results keep
// index order.
template <class F>
auto run_repeats(const ExperimentConfig& c, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> results;
  results.reserve(c.repeat);
  const std::size_t width = std::max<std::size_t>(1, c.threads);
  for (std::size_t begin = 0; begin < c.repeat; begin += width) {
    const std::size_t end = std::min(c.repeat, begin + width);
    if (end - begin == 1) {
      results.push_back(f(begin));
      continue;
    }
    std::vector<std::future<R>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, f, i));
    }
    for (auto& fut : batch) results.push_back(fut.get());
  }
  return results;
}

json stats(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  const double stderr_ = v.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
  return {{"mean", mean},
          {"stderr", stderr_},
          {"max", *std::max_element(v.begin(), v.end())},
          {"min", *std::min_element(v.begin(), v.end())}};
}

double bound_value(BoundKind kind, double m, std::size_t n, double horizon, double omega) {
  BoundSpec spec;
  spec.kind = kind;
  spec.grad_bound = m;
  spec.dimension = n;
  spec.horizon = horizon;
  spec.omega = omega;
  return evaluate_bound(spec);
}

std::vector<double> default_means(std::size_t n) {
  if (n < 2) throw InvalidArgument("need at least 2 arms");
  std::vector<double> means(n, 0.5);
  means[0] = 0.4;
  return means;
}

json base_summary(const ExperimentConfig& c) {
  return {{"command", c.command}, {"seed", c.seed}, {"repeat", c.repeat}};
}

// --- bandit ---------------------------------------------------------------

ExperimentResult run_bandit_command(const ExperimentConfig& c) {
  std::vector<double> means = c.means;
  std::optional<std::uint64_t> env_seed;
  if (!c.arms_config.empty()) {
    ArmsConfig cfg = read_arms_config(c.arms_config);
    means = std::move(cfg.means);
    env_seed = cfg.seed;
  }
  if (means.empty()) means = default_means(c.n.value_or(10));
  const std::size_t n = means.size();
  const std::size_t steps = c.steps.value_or(10000);
  BernoulliArms(means, 0);  // validates the means before any thread starts

  struct Outcome {
    BanditRun run;
    std::uint64_t seed;
  };
  auto outcomes = run_repeats(c, [&](std::size_t i) {
    const std::uint64_t seed = c.seed + i;
    BernoulliArms env(means, splitmix64(env_seed.value_or(seed) + (env_seed ? i : 0)));
    return Outcome{run_bandit(env, steps, seed), seed};
  });

  json s = base_summary(c);
  const double m_eff = effective_bandit_m(n);
  const double bound = bound_value(BoundKind::kT1Mean, m_eff, n, static_cast<double>(steps), 0.0);
  s["arms"] = n;
  s["means"] = means;
  s["steps"] = steps;
  s["grad_bound_effective"] = m_eff;
  s["bound"] = {{"kind", to_string(BoundKind::kT1Mean)}, {"value", bound}};
  json runs = json::array();
  std::vector<double> regrets;
  for (const auto& o : outcomes) {
    regrets.push_back(o.run.report.pseudo_regret);
    runs.push_back({{"seed", o.seed},
                    {"pseudo_regret", o.run.report.pseudo_regret},
                    {"max_estimate_norm", o.run.max_estimate_norm}});
  }
  s["runs"] = std::move(runs);
  s["pseudo_regret"] = stats(regrets);
  s["within_bound"] = s["pseudo_regret"]["mean"].get<double>() <= bound;

  ExperimentResult r;
  r.summary_json = s.dump(2);
  if (c.trace) r.trace_csv = trace_csv(outcomes.front().run.trace);
  return r;
}

// --- experts --------------------------------------------------------------

ScheduleMode parse_md2_mode(const std::string& algorithm) {
  return algorithm == "md2" ? ScheduleMode::kAdaptive : ScheduleMode::kNonadaptive;
}

ExperimentResult run_experts_command(const ExperimentConfig& c) {
  if (c.algorithm != "md1" && c.algorithm != "md2" && c.algorithm != "md2-nonadaptive") {
    throw InvalidArgument("unknown algorithm '" + c.algorithm + "'");
  }
  std::optional<FixedListLosses> file_losses;
  if (!c.losses.empty()) {
    file_losses.emplace(load_loss_csv(c.losses, c.grad_bound));
  } else if (c.adversary != "best-response" && c.adversary != "bernoulli") {
    throw InvalidArgument("unknown adversary '" + c.adversary + "'");
  }
  const bool bernoulli = !file_losses && c.adversary == "bernoulli";
  std::vector<double> means;
  if (bernoulli) means = c.means.empty() ? default_means(c.n.value_or(10)) : c.means;
  const std::size_t n = file_losses ? file_losses->dimension()
                        : bernoulli  ? means.size()
                                     : c.n.value_or(10);
  const std::size_t steps =
      c.steps.value_or(file_losses ? file_losses->length() : std::size_t{10000});
  const std::string source = file_losses ? "file" : c.adversary;
  const double m = bernoulli ? 1.0 : c.grad_bound;

  struct Outcome {
    ExpertsRun run;
    std::uint64_t seed;
  };
  auto outcomes = run_repeats(c, [&](std::size_t i) {
    const std::uint64_t seed = c.seed + i;
    std::unique_ptr<LossSequence> env;
    if (file_losses) {
      env = std::make_unique<FixedListLosses>(*file_losses);
    } else if (bernoulli) {
      env = std::make_unique<BernoulliArms>(means, splitmix64(seed));
    } else {
      env = std::make_unique<BestResponseAdversary>(n, c.grad_bound);
    }
    if (c.algorithm == "md1") return Outcome{run_experts_linear(*env, steps, seed), seed};
    return Outcome{run_experts_nonconvex(*env, steps, seed, parse_md2_mode(c.algorithm)),
                   seed};
  });

  json s = base_summary(c);
  s["algorithm"] = c.algorithm;
  s["losses"] = source;
  s["experts"] = n;
  s["steps"] = steps;
  s["grad_bound"] = m;
  const RegretReport& first = outcomes.front().run.report;
  s["bound"] = {{"kind", first.bound_kind}, {"value", first.bound}};
  json runs = json::array();
  std::vector<double> regrets;
  for (const auto& o : outcomes) {
    regrets.push_back(o.run.report.pseudo_regret);
    runs.push_back({{"seed", o.seed}, {"regret", o.run.report.pseudo_regret}});
  }
  s["runs"] = std::move(runs);
  s["regret"] = stats(regrets);
  s["within_bound"] = s["regret"]["mean"].get<double>() <= first.bound;
  if (c.algorithm != "md1" && regrets.size() >= 10) {
    const BoundKind kind = source == "bernoulli" ? BoundKind::kT2HighProbGeneral
                                                 : BoundKind::kT2HighProbDet;
    const double omega = std::log(1.0 / c.sigma);
    const double hb = bound_value(kind, m, n, static_cast<double>(steps), omega);
    const HighProbResult hp = highprob_check(regrets, hb, c.sigma);
    s["high_probability"] = {{"kind", to_string(kind)},
                             {"sigma", c.sigma},
                             {"omega", omega},
                             {"bound", hb},
                             {"exceedance_fraction", hp.exceedance_fraction},
                             {"allowed_fraction", hp.allowed_fraction},
                             {"pass", hp.pass}};
  }

  ExperimentResult r;
  r.summary_json = s.dump(2);
  if (c.trace) r.trace_csv = trace_csv(outcomes.front().run.trace);
  return r;
}

// --- game / pagerank ------------------------------------------------------

json matrix_json(const SparseGameMatrix& a) {
  return {{"rows", a.rows()},
          {"cols", a.cols()},
          {"nonzeros", a.nonzeros()},
          {"sparsity", a.sparsity()},
          {"max_line_nonzeros", a.max_line_nonzeros()},
          {"entry_bound", a.entry_bound()}};
}

GameOptions game_options(const ExperimentConfig& c, std::size_t i) {
  GameOptions o;
  o.epsilon = c.epsilon;
  o.sigma = c.sigma;
  o.seed = c.seed + i;
  o.iterations = c.iterations;
  o.record_trace = c.trace && i == 0;
  return o;
}

json game_common(const ExperimentConfig& c, const SparseGameMatrix& a,
                 std::size_t iterations, std::uint64_t max_reads) {
  json s = base_summary(c);
  s["matrix"] = matrix_json(a);
  s["epsilon"] = c.epsilon;
  s["sigma"] = c.sigma;
  s["iterations"] = iterations;
  s["iteration_rule"] = c.iterations
                            ? "fixed"
                            : "ceil(8 M^2 (ln max(rows, cols) + 2 ln(1/sigma)) / epsilon^2)";
  const double omega = std::log(1.0 / c.sigma);
  s["bound"] = {{"kind", to_string(BoundKind::kT2NonadaptiveDet)},
                {"omega", omega},
                {"per_player", bound_value(BoundKind::kT2NonadaptiveDet, a.entry_bound(),
                                           std::max(a.rows(), a.cols()),
                                           static_cast<double>(iterations), omega)}};
  s["max_elements_read"] = max_reads;
  s["read_bound"] = 2 * static_cast<std::uint64_t>(a.max_line_nonzeros()) *
                    static_cast<std::uint64_t>(iterations);
  s["sublinear"] = max_reads < a.nonzeros();
  return s;
}

ExperimentResult run_game_command(const ExperimentConfig& c) {
  SparseGameMatrix a =
      c.matrix.empty()
          ? random_sparse_game(c.rows, c.cols, c.per_row, c.matrix_seed)
          : load_matrix_market(c.matrix, c.entry_bound);
  if (c.matrix.empty() && c.entry_bound) a = a.with_entry_bound(*c.entry_bound);

  auto solutions = run_repeats(c, [&](std::size_t i) {
    return solve_matrix_game(a, game_options(c, i));
  });

  std::uint64_t max_reads = 0;
  std::size_t within = 0;
  json runs = json::array();
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const GameSolution& g = solutions[i];
    max_reads = std::max(max_reads, g.elements_read);
    if (g.gap <= c.epsilon) ++within;
    json run = to_json(g, 0);
    run["seed"] = c.seed + i;
    runs.push_back(std::move(run));
  }
  json s = game_common(c, a, solutions.front().iterations, max_reads);
  s["runs"] = std::move(runs);
  s["fraction_gap_within_epsilon"] =
      static_cast<double>(within) / static_cast<double>(solutions.size());
  if (a.rows() <= 1000 && a.cols() <= 1000) {
    s["column_strategy"] = solutions.front().column_strategy.vector();
    s["row_strategy"] = solutions.front().row_strategy.vector();
  }

  ExperimentResult r;
  r.summary_json = s.dump(2);
  if (c.trace && solutions.front().trace) r.trace_csv = trace_csv(*solutions.front().trace);
  return r;
}

ExperimentResult run_pagerank_command(const ExperimentConfig& c) {
  const SparseGameMatrix p =
      c.matrix.empty() ? random_link_matrix(c.n.value_or(200), c.out_degree, c.matrix_seed)
                       : load_matrix_market(c.matrix);
  validate_row_stochastic(p);

  auto results = run_repeats(c, [&](std::size_t i) {
    return pagerank_via_game(p, game_options(c, i));
  });

  std::uint64_t max_reads = 0;
  std::size_t within = 0;
  json runs = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PageRankResult& pr = results[i];
    max_reads = std::max(max_reads, pr.game.elements_read);
    if (pr.residual <= c.epsilon) ++within;
    json run = to_json(pr.game, 0);
    run["seed"] = c.seed + i;
    run["residual"] = pr.residual;
    runs.push_back(std::move(run));
  }
  json s = game_common(c, stationarity_game(p), results.front().game.iterations, max_reads);
  s["nodes"] = p.rows();
  s["runs"] = std::move(runs);
  s["fraction_residual_within_epsilon"] =
      static_cast<double>(within) / static_cast<double>(results.size());
  if (p.rows() <= 1000) s["ranking"] = results.front().ranking.vector();

  ExperimentResult r;
  r.summary_json = s.dump(2);
  if (c.trace && results.front().game.trace) {
    r.trace_csv = trace_csv(*results.front().game.trace);
  }
  return r;
}

// --- sampler-test ---------------------------------------------------------

ExperimentResult run_sampler_command(const ExperimentConfig& c) {
  if (c.sampler != "gumbel" && c.sampler != "tree" && c.sampler != "categorical") {
    throw InvalidArgument("unknown sampler '" + c.sampler + "'");
  }
  if (!(c.beta > 0.0)) throw InvalidArgument("beta must be positive");
  std::vector<double> logits = c.logits;
  if (logits.empty()) {
    const std::size_t n = c.n.value_or(10);
    if (n < 2) throw InvalidArgument("sampler-test: need at least 2 logits");
    for (std::size_t i = 0; i < n; ++i) {
      logits.push_back(3.0 * static_cast<double>(i) / static_cast<double>(n - 1));
    }
  }
  const SimplexPoint expected = softmax_prox(logits, c.beta);

  struct Outcome {
    std::vector<std::uint64_t> counts;
    ChiSquareResult chi;
  };
  auto outcomes = run_repeats(c, [&](std::size_t i) {
    Rng rng(c.seed + i);
    std::vector<std::uint64_t> counts(logits.size(), 0);
    if (c.sampler == "tree") {
      const ExpWeightsSampler tree(logits, 1.0 / c.beta);
      for (std::size_t d = 0; d < c.draws; ++d) ++counts[tree.sample(rng)];
    } else if (c.sampler == "categorical") {
      for (std::size_t d = 0; d < c.draws; ++d) {
        ++counts[sample_categorical(expected.weights(), rng)];
      }
    } else {
      for (std::size_t d = 0; d < c.draws; ++d) {
        ++counts[gumbel_argmax_sample(logits, c.beta, rng)];
      }
    }
    ChiSquareResult chi = chi_square_gof(counts, expected);
    return Outcome{std::move(counts), chi};
  });

  json s = base_summary(c);
  s["sampler"] = c.sampler;
  s["beta"] = c.beta;
  s["draws"] = c.draws;
  s["logits"] = logits;
  s["expected"] = expected.vector();
  s["counts"] = outcomes.front().counts;
  json runs = json::array();
  bool pass = true;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const ChiSquareResult& chi = outcomes[i].chi;
    pass = pass && chi.p_value >= 1e-3;
    runs.push_back({{"seed", c.seed + i},
                    {"statistic", chi.statistic},
                    {"degrees_of_freedom", chi.degrees_of_freedom},
                    {"p_value", chi.p_value}});
  }
  s["runs"] = std::move(runs);
  s["pass"] = pass;

  ExperimentResult r;
  r.summary_json = s.dump(2);
  return r;
}

// --- bounds ---------------------------------------------------------------

ExperimentResult run_bounds_command(const ExperimentConfig& c) {
  BoundTableRequest q;
  if (c.kinds) {
    for (const std::string& k : *c.kinds) q.kinds.push_back(parse_bound_kind(k));
  } else {
    for (BoundKind k : all_bound_kinds()) {
      if (k != BoundKind::kR9Product) q.kinds.push_back(k);
    }
  }
  q.grad_bounds = c.grad_bounds;
  q.dimensions = c.dims;
  q.horizons = c.horizons;
  q.omegas = c.omegas;

  ExperimentResult r;
  r.table_csv = emit_bound_table(q);
  const auto rows = static_cast<std::size_t>(
      std::count(r.table_csv.begin(), r.table_csv.end(), '\n') - 1);
  json s = {{"command", c.command}, {"rows", rows}};
  r.summary_json = s.dump(2);
  return r;
}

}  // namespace

void validate_command(std::string_view command) {
  if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands)) {
    throw InvalidArgument("unknown command '" + std::string(command) + "'");
  }
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  const std::string v(value);
  if (key == "n") n = positive(key, value);
  else if (key == "steps") steps = positive(key, value);
  else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "repeat") repeat = positive(key, value);
  else if (key == "threads") threads = positive(key, value);
  else if (key == "trace") {
    if (v == "true" || v == "1") trace = true;
    else if (v == "false" || v == "0") trace = false;
    else throw InvalidArgument("invalid value '" + v + "' for trace");
  }
  else if (key == "means") means = parse_list<double>(key, value);
  else if (key == "arms-config") arms_config = v;
  else if (key == "losses") losses = v;
  else if (key == "grad-bound") grad_bound = positive_real(key, value);
  else if (key == "adversary") adversary = v;
  else if (key == "algorithm") algorithm = v;
  else if (key == "epsilon") epsilon = positive_real(key, value);
  else if (key == "sigma") {
    sigma = parse_number<double>(key, value);
    if (!(sigma > 0.0 && sigma < 1.0)) throw InvalidArgument("sigma must lie in (0, 1)");
  }
  else if (key == "iterations") iterations = positive(key, value);
  else if (key == "entry-bound") entry_bound = positive_real(key, value);
  else if (key == "matrix") matrix = v;
  else if (key == "rows") rows = positive(key, value);
  else if (key == "cols") cols = positive(key, value);
  else if (key == "per-row") per_row = positive(key, value);
  else if (key == "out-degree") out_degree = positive(key, value);
  else if (key == "matrix-seed") matrix_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "sampler") sampler = v;
  else if (key == "logits") logits = parse_list<double>(key, value);
  else if (key == "beta") beta = positive_real(key, value);
  else if (key == "draws") draws = positive(key, value);
  else if (key == "kinds") kinds = split_list(value);
  else if (key == "grad-bounds") grad_bounds = parse_list<double>(key, value);
  else if (key == "dims") dims = parse_list<std::size_t>(key, value);
  else if (key == "horizons") horizons = parse_list<double>(key, value);
  else if (key == "omegas") omegas = parse_list<double>(key, value);
  else throw InvalidArgument("unknown option '" + std::string(key) + "'");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_command(config.command);
  ExperimentResult r;
  if (config.command == "bandit") r = run_bandit_command(config);
  else if (config.command == "experts") r = run_experts_command(config);
  else if (config.command == "game") r = run_game_command(config);
  else if (config.command == "pagerank") r = run_pagerank_command(config);
  else if (config.command == "sampler-test") r = run_sampler_command(config);
  else r = run_bounds_command(config);
  r.summary_hash = fnv1a64(r.summary_json);
  return r;
}

}  // namespace rmd
