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

// Acceptance suite. Each criterion prints one PASS/FAIL line; run a single
// criterion with --criterion K.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rmd/analysis.hpp"
#include "rmd/bandits.hpp"
#include "rmd/dual_state.hpp"
#include "rmd/environments.hpp"
#include "rmd/experts.hpp"
#include "rmd/matrix_game.hpp"
#include "rmd/pagerank.hpp"
#include "rmd/simplex.hpp"

#ifndef RMD_CLI_PATH
#error "RMD_CLI_PATH must point at the rmd_cli executable"
#endif

using namespace rmd;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), f, args...);
  return buf.data();
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Runs f(0..count-1) concurrently and returns the results in index order.
template <class F>
auto parallel_map(std::size_t count, F f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::future<R>> futures;
  for (std::size_t i = 0; i < count; ++i) futures.push_back(std::async(std::launch::async, f, i));
  std::vector<R> out;
  for (auto& fu : futures) out.push_back(fu.get());
  return out;
}

SparseGameMatrix from_dense(const oracle::Matrix& a) {
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != 0.0) entries.push_back({i, j, a[i][j]});
    }
  }
  return SparseGameMatrix(a.size(), a.front().size(), std::move(entries));
}

// 1. Dual-averaging iterate vs. the explicit exponential-weights formula.
Verdict criterion_1() {
  const std::size_t n = 10;
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DualState state = DualState::Adaptive(n, 1.0);
  std::vector<long double> cumulative(n, 0.0L);
  double worst = 0.0;
  for (std::size_t t = 1; t <= 1000; ++t) {
    std::vector<double> g(n);
    for (double& v : g) v = u(gen);
    for (std::size_t i = 0; i < n; ++i) cumulative[i] += g[i];
    Md1Step step = md1_step(std::move(state), SubgradientSample::Dense(g, 1.0));
    state = std::move(step.state);
    const long double beta =
        std::sqrt(static_cast<long double>(t + 1)) / std::sqrt(std::log(10.0L));
    const long double lo = *std::min_element(cumulative.begin(), cumulative.end());
    long double z = 0.0L;
    std::vector<long double> w(n);
    for (std::size_t i = 0; i < n; ++i) z += w[i] = std::exp(-(cumulative[i] - lo) / beta);
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, static_cast<double>(std::abs(w[i] / z - step.next[i])));
    }
  }
  return {worst <= 1e-10, fmt("max coordinate difference %.3g over 1000 steps (tol 1e-10)", worst)};
}

// Deterministic or adaptive loss sequence used in the criterion 2 suite.
class GeneratedLosses final : public LossSequence {
 public:
  using Rule = std::function<std::vector<double>(std::size_t, const SimplexPoint&)>;
  GeneratedLosses(std::size_t n, std::string name, Rule rule)
      : n_(n), name_(std::move(name)), rule_(std::move(rule)) {}
  std::size_t dimension() const override { return n_; }
  double bound() const override { return 1.0; }
  std::string kind() const override { return name_; }
  std::vector<double> next_loss(const StepContext& ctx) override {
    return rule_(ctx.step, ctx.distribution);
  }

 private:
  std::size_t n_;
  std::string name_;
  Rule rule_;
};

std::vector<GeneratedLosses> adversarial_suite() {
  std::vector<GeneratedLosses> suite;
  const std::array<std::size_t, 3> dims{2, 10, 100};
  for (std::size_t s = 0; s < 50; ++s) {
    const std::size_t n = dims[s % 3];
    const std::uint64_t seed = 1000 + s;
    switch (s / 3 % 6) {
      case 0:  // unit loss on the heaviest coordinate
        suite.emplace_back(n, "best-response", [n](std::size_t, const SimplexPoint& x) {
          const auto w = x.weights();
          std::vector<double> l(n, 0.0);
          l[std::max_element(w.begin(), w.end()) - w.begin()] = 1.0;
          return l;
        });
        break;
      case 1:  // reward the lightest coordinate
        suite.emplace_back(n, "reward-lightest", [n](std::size_t, const SimplexPoint& x) {
          const auto w = x.weights();
          std::vector<double> l(n, 0.0);
          l[std::min_element(w.begin(), w.end()) - w.begin()] = -1.0;
          return l;
        });
        break;
      case 2: {  // leader switching: 1/2 on coordinate 0 first, then alternate
        suite.emplace_back(n, "alternating", [n](std::size_t k, const SimplexPoint&) {
          std::vector<double> l(n, 0.0);
          if (k == 1) l[0] = 0.5;
          else l[(k % 2 == 0) ? 1 : 0] = 1.0;
          return l;
        });
        break;
      }
      case 3: {  // i.i.d. uniform losses in [-1, 1]
        auto gen = std::make_shared<std::mt19937_64>(seed);
        suite.emplace_back(n, "uniform", [n, gen](std::size_t, const SimplexPoint&) {
          std::uniform_real_distribution<double> u(-1.0, 1.0);
          std::vector<double> l(n);
          for (double& v : l) v = u(*gen);
          return l;
        });
        break;
      }
      case 4: {  // round robin unit losses
        suite.emplace_back(n, "round-robin", [n](std::size_t k, const SimplexPoint&) {
          std::vector<double> l(n, 0.0);
          l[k % n] = 1.0;
          return l;
        });
        break;
      }
      default: {  // signs chosen against the current mixture, random magnitudes
        auto gen = std::make_shared<std::mt19937_64>(seed);
        suite.emplace_back(n, "mixed-sign", [n, gen](std::size_t, const SimplexPoint& x) {
          std::uniform_real_distribution<double> u(0.0, 1.0);
          const double avg = 1.0 / static_cast<double>(n);
          std::vector<double> l(n);
          for (std::size_t i = 0; i < n; ++i) l[i] = (x[i] >= avg ? 1.0 : -1.0) * u(*gen);
          return l;
        });
        break;
      }
    }
  }
  return suite;
}

// 2. Deterministic MD1 against 50 adversarial sequences.
Verdict criterion_2() {
  std::vector<GeneratedLosses> suite = adversarial_suite();
  const std::size_t horizon = 10000;
  std::size_t within = 0;
  double worst_ratio = -1e300;
  std::string worst_kind;
  for (auto& seq : suite) {
    const ExpertsRun run = run_experts_linear(seq, horizon);
    const double bound = 2.0 * std::sqrt(std::log(static_cast<double>(seq.dimension())) / 1e4);
    const double ratio = run.report.pseudo_regret / bound;
    if (run.report.pseudo_regret <= bound) ++within;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_kind = seq.kind() + " n=" + std::to_string(seq.dimension());
    }
  }
  return {within == suite.size(),
          fmt("%zu/%zu sequences within 2M sqrt(ln n / N); worst regret/bound %.4f (%s)", within,
              suite.size(), worst_ratio, worst_kind.c_str())};
}

// 3. MD2 against the best-response adversary.
Verdict criterion_3() {
  const std::size_t n = 10, horizon = 10000, seeds = 50;
  const std::vector<double> regrets = parallel_map(seeds, [&](std::size_t s) {
    BestResponseAdversary adv(n);
    return run_experts_nonconvex(adv, horizon, 500 + s).report.pseudo_regret;
  });
  const double omega = std::log(10.0);
  const double mean_bound = evaluate_bound({BoundKind::kT2Mean, 1.0, n, 1e4, 0.0, {}});
  const double hp_bound = evaluate_bound({BoundKind::kT2HighProbDet, 1.0, n, 1e4, omega, {}});
  const HighProbResult hp = highprob_check(regrets, hp_bound, std::exp(-omega));
  const double m = mean(regrets);
  return {m <= mean_bound && hp.pass,
          fmt("mean pseudo-regret %.5f <= %.5f; exceedances of %.5f: %zu/%zu (allowed fraction "
              "%.3f)",
              m, mean_bound, hp_bound, hp.exceedances, regrets.size(), hp.allowed_fraction)};
}

// 4. Gumbel-max sampling against softmax.
Verdict criterion_4() {
  const std::array<std::size_t, 3> dims{2, 5, 50};
  const std::vector<double> pvals = parallel_map(20, [&](std::size_t c) {
    std::mt19937_64 gen(40 + c);
    std::uniform_real_distribution<double> uy(-3.0, 3.0), ub(0.2, 3.0);
    const std::size_t n = dims[c % 3];
    std::vector<double> y(n);
    for (double& v : y) v = uy(gen);
    const double beta = ub(gen);
    Rng rng(900 + c);
    std::vector<std::uint64_t> counts(n, 0);
    for (int d = 0; d < 100000; ++d) ++counts[gumbel_argmax_sample(y, beta, rng)];
    return chi_square_gof(counts, softmax_prox(y, beta)).p_value;
  });
  const auto passed = std::count_if(pvals.begin(), pvals.end(), [](double p) { return p >= 1e-3; });
  const double smallest = *std::min_element(pvals.begin(), pvals.end());
  return {passed >= 19, fmt("%td/20 cases with p >= 0.001 (smallest p %.4g)", passed, smallest)};
}

// 5. Bandit pseudo-regret and its sqrt(n ln n / N) scaling.
Verdict criterion_5() {
  const std::size_t horizon = 20000, seeds = 20;
  bool all_within = true;
  std::vector<double> ratios;
  std::string detail;
  for (std::size_t n : {2u, 8u, 32u}) {
    std::vector<double> means(n, 0.5);
    means[0] = 0.4;
    const std::vector<double> regrets = parallel_map(seeds, [&](std::size_t s) {
      BernoulliArms arms(means, 7000 + 100 * n + s);
      return run_bandit(arms, horizon, s).report.pseudo_regret;
    });
    const double nd = static_cast<double>(n);
    const double m = mean(regrets);
    const double bound = 2.0 * std::sqrt(2.0 * nd) * std::sqrt(std::log(nd) / 2e4);
    const double ratio = m / std::sqrt(nd * std::log(nd) / 2e4);
    all_within = all_within && m <= bound;
    ratios.push_back(ratio);
    detail += fmt("n=%zu regret %.5f bound %.5f ratio %.3f; ", n, m, bound, ratio);
  }
  const double spread = *std::max_element(ratios.begin(), ratios.end()) /
                        *std::min_element(ratios.begin(), ratios.end());
  detail += fmt("ratio spread %.3f (< 2)", spread);
  return {all_within && spread < 2.0, detail};
}

// 6. Exhaustive expectation of the importance-weighted estimator.
Verdict criterion_6() {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 5;
    std::vector<double> w(n), r(n);
    for (double& v : w) v = u(gen) + 1e-3;
    for (double& v : r) v = u(gen);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& v : w) v /= total;
    const SimplexPoint p(w);
    std::vector<double> expectation(n, 0.0);
    for (std::size_t arm = 0; arm < n; ++arm) {
      const SubgradientSample g = bandit_gradient_estimate(p, {arm, r[arm], 1});
      g.for_each_entry([&](std::size_t i, double v) { expectation[i] += p[arm] * v; });
    }
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(expectation[i] - r[i]));
  }
  return {worst <= 1e-12, fmt("max |E[estimate] - r| = %.3g over 100 cases (tol 1e-12)", worst)};
}

const std::uint64_t kGameMatrixSeed = 2026;

// 7. Gap of the randomized solver on a 200 x 200 sparse game.
Verdict criterion_7() {
  const SparseGameMatrix a = random_sparse_game(200, 200, 10, kGameMatrixSeed);
  const std::vector<GameSolution> runs = parallel_map(20, [&](std::size_t s) {
    GameOptions opt;
    opt.epsilon = 0.1;
    opt.sigma = 0.1;
    opt.seed = s;
    return solve_matrix_game(a, opt);
  });
  std::size_t within = 0;
  double worst = 0.0;
  for (const auto& r : runs) {
    within += r.gap <= 0.1;
    worst = std::max(worst, r.gap);
  }
  const std::size_t expected_n =
      static_cast<std::size_t>(std::ceil(8.0 * (std::log(200.0) + 2.0 * std::log(10.0)) / 0.01));
  return {within >= 15 && runs.front().iterations == expected_n,
          fmt("%zu/20 runs with gap <= 0.1 (need 15); N = %zu; s = %.2f; worst gap %.4f", within,
              runs.front().iterations, a.sparsity(), worst)};
}

// 8. Solver reads against the matrix size at epsilon = 0.25.
Verdict criterion_8() {
  const SparseGameMatrix a = random_sparse_game(200, 200, 10, kGameMatrixSeed);
  const std::vector<GameSolution> runs = parallel_map(20, [&](std::size_t s) {
    GameOptions opt;
    opt.epsilon = 0.25;
    opt.sigma = 0.1;
    opt.seed = s;
    return solve_matrix_game(a, opt);
  });
  const std::uint64_t budget = 2 * a.max_line_nonzeros() * runs.front().iterations;
  std::uint64_t most = 0;
  bool contract = true, sublinear = true;
  for (const auto& r : runs) {
    most = std::max(most, r.elements_read);
    contract = contract && r.elements_read <= budget;
    sublinear = sublinear && r.elements_read < a.nonzeros();
  }
  std::string detail =
      fmt("max elements_read %llu vs nnz %zu (sublinear: %s); counter contract <= 2 s_max N = "
          "%llu: %s; N = %zu",
          static_cast<unsigned long long>(most), a.nonzeros(), sublinear ? "yes" : "no",
          static_cast<unsigned long long>(budget), contract ? "holds" : "violated",
          runs.front().iterations);

  // Same epsilon on a matrix large enough for the read count to drop below nnz.
  const SparseGameMatrix big = random_sparse_game(100000, 100000, 10, kGameMatrixSeed);
  GameOptions opt;
  opt.epsilon = 0.25;
  opt.sigma = 0.1;
  const GameSolution large = solve_matrix_game(big, opt);
  detail += fmt("; info: 100000x100000 with s = 10 reads %llu of %zu nonzeros, gap %.4f",
                static_cast<unsigned long long>(large.elements_read), big.nonzeros(), large.gap);
  return {contract && sublinear, detail};
}

// 9. Solver value estimate against the exact value of tiny games.
Verdict criterion_9() {
  const std::vector<std::pair<double, bool>> outcomes = parallel_map(120, [](std::size_t k) {
    const std::size_t size = k < 100 ? 2 : 3;
    std::mt19937_64 gen(9000 + k);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    oracle::Matrix m(size, std::vector<double>(size));
    for (auto& row : m) {
      for (double& v : row) v = u(gen);
    }
    const auto eq = oracle::solve_game(m);
    if (!eq) return std::pair<double, bool>{1e300, false};
    GameOptions opt;
    opt.epsilon = 0.05;
    opt.sigma = 0.05;
    opt.seed = k;
    const GameSolution s = solve_matrix_game(from_dense(m), opt);
    const double err = std::abs(s.value_estimate - eq->value);
    return std::pair<double, bool>{err, err <= 0.05};
  });
  std::size_t small = 0, large = 0;
  double worst = 0.0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    (k < 100 ? small : large) += outcomes[k].second;
    worst = std::max(worst, outcomes[k].first);
  }
  const std::size_t total = small + large;
  return {total >= 108,
          fmt("%zu/100 2x2 and %zu/20 3x3 runs within 0.05 of the exact value (%zu/120, need "
              "108); worst error %.4f",
              small, large, total, worst)};
}

// 10. Stationary vector of a 50-node link matrix.
Verdict criterion_10() {
  const SparseGameMatrix p = random_link_matrix(50, 5, 10);
  oracle::Matrix dense(50, std::vector<double>(50, 0.0));
  for (const auto& e : p.entries()) dense[e.row][e.col] = e.value;
  const std::vector<double> pi = oracle::power_iteration(dense);
  const SparseGameMatrix g = stationarity_game(p);
  const double oracle_residual = duality_gap(g, SimplexPoint(pi), SimplexPoint::Uniform(50));

  const std::vector<PageRankResult> runs = parallel_map(20, [&](std::size_t s) {
    GameOptions opt;
    opt.epsilon = 0.05;
    opt.sigma = 0.1;
    opt.seed = s;
    return pagerank_via_game(p, opt);
  });
  std::size_t within = 0;
  double distance = 0.0;
  for (const auto& r : runs) {
    within += r.residual <= 0.05;
    double l1 = 0.0;
    for (std::size_t i = 0; i < 50; ++i) l1 += std::abs(r.ranking[i] - pi[i]);
    distance = std::max(distance, l1);
  }
  return {within >= 18 && oracle_residual <= 1e-8,
          fmt("%zu/20 runs with residual <= 0.05 (need 18); power-iteration fixed point residual "
              "%.2g; max ||x - pi||_1 %.4f",
              within, oracle_residual, distance)};
}

// 11. Product-simplex prox.
Verdict criterion_11() {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> uy(-3.0, 3.0), ub(0.2, 3.0), um(0.2, 4.0);
  double reduction = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + gen() % 20;
    std::vector<double> y(n);
    for (double& v : y) v = uy(gen);
    const double beta = ub(gen);
    const auto blocks = product_simplex_prox(y, beta, ProductSimplexSpec({{n, 1.0}}));
    const std::vector<double> want = oracle::softmax(y, beta);
    for (std::size_t i = 0; i < n; ++i) {
      reduction = std::max(reduction, std::abs(blocks[0][i] - want[i]));
    }
  }
  double mass_error = 0.0, stationarity = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SimplexBlock> spec;
    const std::size_t nb = 1 + gen() % 4;
    for (std::size_t j = 0; j < nb; ++j) spec.push_back({1 + gen() % 6, um(gen)});
    const ProductSimplexSpec ps(spec);
    std::vector<double> y(ps.total_size());
    for (double& v : y) v = uy(gen);
    const double beta = ub(gen);
    const auto blocks = product_simplex_prox(y, beta, ps);
    std::vector<double> z, owner;
    for (std::size_t j = 0; j < nb; ++j) {
      double s = 0.0;
      for (double v : blocks[j].weights()) {
        s += v;
        z.push_back(v);
        owner.push_back(spec[j].mass);
      }
      mass_error = std::max(mass_error, std::abs(s - spec[j].mass));
    }
    // The objective is separable; central-difference partials with steps
    // relative to each coordinate must agree within every block.
    auto term = [&](std::size_t i, double x) {
      return y[i] * x - beta * x * std::log(x / owner[i]);
    };
    std::vector<double> partial(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double h = 1e-4 * z[i];
      partial[i] = (term(i, z[i] + h) - term(i, z[i] - h)) / (2.0 * h);
    }
    std::size_t offset = 0;
    for (const SimplexBlock& blk : spec) {
      for (std::size_t a = 1; a < blk.size; ++a) {
        stationarity = std::max(stationarity, std::abs(partial[offset + a] - partial[offset]));
      }
      offset += blk.size;
    }
  }
  return {reduction <= 1e-12 && mass_error <= 1e-9 && stationarity <= 1e-6,
          fmt("reduction error %.3g (tol 1e-12); block mass error %.3g (tol 1e-9); max "
              "partial-derivative spread %.3g (tol 1e-6)",
              reduction, mass_error, stationarity)};
}

struct CliRun {
  int code;
  std::string hash;
  std::string output;
};

CliRun run_cli(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string(RMD_CLI_PATH) + " " + args + " -o " + out.string() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, "", ""};
  std::string err;
  std::array<char, 1024> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), got);
  const int status = pclose(pipe);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, err, ss.str()};
}

// 12. Reruns of every CLI subcommand with the same seed.
Verdict criterion_12() {
  const std::vector<std::string> commands{
      "bandit --arms 8 --steps 2000 --repeat 4 --threads 2 --seed 12",
      "experts --n 10 --steps 2000 --algorithm md2 --repeat 10 --threads 3 --seed 12",
      "game --rows 100 --cols 100 --per-row 5 --epsilon 0.3 --repeat 3 --threads 2 --seed 12",
      "pagerank --nodes 40 --epsilon 0.2 --repeat 2 --seed 12",
      "sampler-test --sampler gumbel --draws 20000 --repeat 2 --seed 12",
      "bounds --dims 2,10 --horizons 100,10000"};
  const auto out = std::filesystem::temp_directory_path() / "rmd_acceptance_12.out";
  std::size_t identical = 0;
  std::string failures;
  for (const auto& c : commands) {
    const CliRun a = run_cli(c, out);
    const CliRun b = run_cli(c, out);
    const bool same = a.code == 0 && b.code == 0 && a.hash == b.hash && !a.hash.empty() &&
                      a.output == b.output;
    identical += same;
    if (!same) failures += " [" + c.substr(0, c.find(' ')) + "]";
  }
  std::filesystem::remove(out);
  return {identical == commands.size(),
          fmt("%zu/%zu subcommands reproduce the summary hash%s", identical, commands.size(),
              failures.c_str())};
}

using Criterion = Verdict (*)();
constexpr std::array<std::pair<const char*, Criterion>, 12> kCriteria{{
    {"MD1 form equivalence", criterion_1},
    {"MD1 regret bound on adversarial sequences", criterion_2},
    {"MD2 pseudo-regret against a best-response adversary", criterion_3},
    {"Gumbel-max sampling matches softmax", criterion_4},
    {"bandit pseudo-regret rate", criterion_5},
    {"bandit estimator unbiasedness", criterion_6},
    {"matrix game gap", criterion_7},
    {"matrix game sublinearity", criterion_8},
    {"tiny games against the exact value", criterion_9},
    {"pagerank residual", criterion_10},
    {"product-simplex prox", criterion_11},
    {"CLI determinism", criterion_12},
}};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion K]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::fprintf(stderr, "criterion must lie in 1..%zu\n", kCriteria.size());
    return 2;
  }
  bool all = true;
  for (std::size_t k = 0; k < kCriteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k + 1) != only) continue;
    Verdict v{false, ""};
    try {
      v = kCriteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu %s: %s: %s\n", k + 1, v.pass ? "PASS" : "FAIL", kCriteria[k].first,
                v.detail.c_str());
    std::fflush(stdout);
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
