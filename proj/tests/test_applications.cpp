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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rmd/bandits.hpp"
#include "rmd/errors.hpp"
#include "rmd/experts.hpp"
#include "rmd/matrix_game.hpp"
#include "rmd/pagerank.hpp"

using namespace rmd;

namespace {

SparseGameMatrix from_dense(const oracle::Matrix& a) {
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != 0.0) entries.push_back({i, j, a[i][j]});
    }
  }
  return SparseGameMatrix(a.size(), a.front().size(), std::move(entries));
}

oracle::Matrix to_dense(const SparseGameMatrix& a) {
  oracle::Matrix d(a.rows(), std::vector<double>(a.cols(), 0.0));
  for (const auto& e : a.entries()) d[e.row][e.col] = e.value;
  return d;
}

SimplexPoint normalized(std::vector<double> v) {
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& x : v) x /= total;
  return SimplexPoint(std::move(v));
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double standard_error(const std::vector<double>& v) {
  const double mu = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

// Experts sitting at fixed points of [0, 1]^2; nature moves along a circle.
ExpertProblem two_point_problem(std::vector<std::vector<double>> points,
                                std::function<double(std::span<const double>,
                                                     std::span<const double>)> loss,
                                double bound) {
  ExpertProblem p;
  p.experts = points.size();
  p.loss_bound = bound;
  p.strategies = [points](std::size_t) { return points; };
  p.nature = [](std::size_t step, std::span<const double>) {
    const double t = 0.37 * static_cast<double>(step);
    return std::vector<double>{0.5 + 0.5 * std::cos(t), 0.5 + 0.5 * std::sin(t)};
  };
  p.loss = std::move(loss);
  return p;
}

double sq_dist_over_4(std::span<const double> omega, std::span<const double> zeta) {
  double s = 0.0;
  for (std::size_t d = 0; d < omega.size(); ++d) s += (zeta[d] - omega[d]) * (zeta[d] - omega[d]);
  return s / 4.0;
}

double inner(std::span<const double> omega, std::span<const double> zeta) {
  return std::inner_product(omega.begin(), omega.end(), zeta.begin(), 0.0);
}

}  // namespace

TEST_CASE("bandit with a free arm stays under the bound") {
  const double bound = 2.0 * 2.0 * std::sqrt(std::log(2.0) / 5000.0);
  std::vector<double> regrets;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BernoulliArms arms({0.0, 1.0}, 1000 + seed);
    const BanditRun run = run_bandit(arms, 5000, seed);
    CHECK(run.trace.complete());
    CHECK(run.report.bound == doctest::Approx(bound));
    regrets.push_back(run.report.pseudo_regret);
  }
  CHECK(mean(regrets) <= bound);
}

TEST_CASE("bandit with identical arms has no pseudo-regret") {
  std::vector<double> regrets;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BernoulliArms arms({0.5, 0.5}, 77 + seed);
    regrets.push_back(run_bandit(arms, 2000, seed).report.pseudo_regret);
  }
  CHECK(std::abs(mean(regrets)) <= 3.0 * standard_error(regrets) + 1e-12);
}

TEST_CASE("bandit edge cases") {
  BernoulliArms arms({0.3, 0.6}, 5);
  const BanditRun one = run_bandit(arms, 1, 9);
  CHECK(one.trace.size() == 1);
  CHECK(one.report.horizon == 1);
  CHECK(one.report.pseudo_regret <= 1.0);
  CHECK(one.report.pseudo_regret ==
        doctest::Approx((one.report.algorithm_loss - one.report.comparator_loss) / 1.0));

  BernoulliArms lone({0.5}, 1);
  CHECK_THROWS_AS(run_bandit(lone, 10, 0), InvalidArgument);
  CHECK_THROWS_AS(run_bandit(arms, 0, 0), InvalidArgument);
  FixedListLosses big({{2.0, 0.0}}, 2.0);
  CHECK_THROWS_AS(run_bandit(big, 1, 0), InvalidArgument);
}

TEST_CASE("bandit estimates are unclipped and recorded") {
  FixedListLosses adversarial(std::vector<std::vector<double>>(500, {1.0, 0.0}), 1.0);
  const BanditRun run = run_bandit(adversarial, 500, 3);
  CHECK(run.max_estimate_norm >= 1.0);
  for (const auto& r : run.trace.records()) CHECK(r.loss == (r.action == 0 ? 1.0 : 0.0));
}

TEST_CASE("linear experts") {
  FixedListLosses constant(std::vector<std::vector<double>>(10000, {1.0, 0.0}), 1.0);
  const ExpertsRun run = run_experts_linear(constant, 10000);
  CHECK(run.report.pseudo_regret <= 2.0 * std::sqrt(std::log(2.0) / 1e4));
  CHECK(run.report.pseudo_regret > 0.0);

  FixedListLosses same(std::vector<std::vector<double>>(100, {0.3, 0.3, 0.3}), 1.0);
  CHECK(run_experts_linear(same, 100).report.pseudo_regret == doctest::Approx(0.0).epsilon(1e-15));

  FixedListLosses single(std::vector<std::vector<double>>(5, {0.3}), 1.0);
  CHECK_THROWS_AS(run_experts_linear(single, 5), InvalidArgument);

  FixedListLosses violating({{0.5, 1.5}}, 1.0);
  CHECK_THROWS_AS(run_experts_linear(violating, 1), ContractViolation);
}

TEST_CASE("linear experts never exceed the bound on adversarial sequences") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {2u, 10u}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::vector<double>> rows(2000, std::vector<double>(n));
      for (auto& r : rows) {
        for (double& v : r) v = u(gen);
      }
      FixedListLosses seq(rows, 1.0);
      const ExpertsRun run = run_experts_linear(seq, rows.size());
      CHECK(run.report.pseudo_regret <= run.report.bound);
    }
    BestResponseAdversary adv(n);
    const ExpertsRun run = run_experts_linear(adv, 2000);
    CHECK(run.report.pseudo_regret <= run.report.bound);
  }
}

TEST_CASE("convex experts with a linear loss reduce to linear experts") {
  const ExpertProblem p = two_point_problem({{0.1, 0.9}, {0.8, 0.2}, {0.5, 0.5}}, inner, 2.0);
  const ConvexExpertsRun convex = run_experts_convex(p, 300);
  FixedListLosses induced(convex.induced_losses, 2.0);
  const ExpertsRun linear = run_experts_linear(induced, 300);
  for (std::size_t k = 0; k < 300; ++k) {
    const auto& a = *convex.trace.records()[k].distribution;
    const auto& b = *linear.trace.records()[k].distribution;
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
  }
  CHECK(convex.surrogate.pseudo_regret ==
        doctest::Approx(linear.report.pseudo_regret).epsilon(1e-12));
  // For linear losses the realized and surrogate paths coincide.
  for (std::size_t k = 0; k < 300; ++k) {
    CHECK(convex.realized_path[k] == doctest::Approx(convex.surrogate_path[k]).epsilon(1e-9));
  }
}

TEST_CASE("convex experts: surrogate regret dominates realized regret") {
  const ExpertProblem p = two_point_problem({{0.0, 0.0}, {1.0, 1.0}}, sq_dist_over_4, 0.5);
  const ConvexExpertsRun run = run_experts_convex(p, 2000);
  REQUIRE(run.surrogate_path.size() == 2000);
  for (std::size_t k = 0; k < 2000; ++k) {
    CHECK(run.surrogate_path[k] >= run.realized_path[k] - 1e-12);
  }
  // Independent replay of the played mixtures.
  for (std::size_t k = 0; k < 2000; k += 97) {
    const auto& x = *run.trace.records()[k].distribution;
    std::vector<double> play(2, 0.0);
    const std::vector<std::vector<double>> pts{{0.0, 0.0}, {1.0, 1.0}};
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t d = 0; d < 2; ++d) play[d] += x[i] * pts[i][d];
    }
    CHECK(play[0] == doctest::Approx(run.plays[k][0]).epsilon(1e-14));
  }
  CHECK(run.surrogate.pseudo_regret <= run.surrogate.bound);
}

TEST_CASE("convex experts: a single expert has zero regret") {
  const ExpertProblem p = two_point_problem({{0.3, 0.6}}, sq_dist_over_4, 0.5);
  const ConvexExpertsRun run = run_experts_convex(p, 50);
  CHECK(run.realized.pseudo_regret == doctest::Approx(0.0));
  CHECK(run.surrogate.pseudo_regret == doctest::Approx(0.0));
  CHECK(run.trace.complete());
}

TEST_CASE("nonconvex experts") {
  const double bound = 2.0 * std::sqrt(std::log(2.0) / 1e4);
  std::vector<double> regrets;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FixedListLosses constant(std::vector<std::vector<double>>(10000, {0.0, 1.0}), 1.0);
    const ExpertsRun run = run_experts_nonconvex(constant, 10000, seed);
    CHECK(run.report.bound == doctest::Approx(bound));
    regrets.push_back(run.report.pseudo_regret);
  }
  CHECK(mean(regrets) <= bound);

  FixedListLosses same(std::vector<std::vector<double>>(100, {0.7, 0.7}), 1.0);
  CHECK(run_experts_nonconvex(same, 100, 1).report.pseudo_regret ==
        doctest::Approx(0.0).epsilon(1e-15));

  std::vector<double> adversarial;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BestResponseAdversary adv(2);
    adversarial.push_back(run_experts_nonconvex(adv, 10000, seed).report.pseudo_regret);
  }
  CHECK(mean(adversarial) <= bound);
}

TEST_CASE("nonconvex experts over a problem use the drawn expert's loss") {
  const ExpertProblem p = two_point_problem(
      {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}},
      [](std::span<const double> omega, std::span<const double> zeta) {
        return std::sin(6.0 * sq_dist_over_4(omega, zeta));
      },
      1.0);
  const ExpertsRun run = run_experts_nonconvex(p, 500, 4, ScheduleMode::kNonadaptive);
  CHECK(run.trace.complete());
  CHECK(run.trace.metadata().algorithm == "md2-nonadaptive");
  CHECK(run.report.pseudo_regret >= -2.0);
}

TEST_CASE("game iteration count") {
  CHECK(game_iterations(0.1, 0.1, 200, 200) ==
        static_cast<std::size_t>(std::ceil(8.0 * (std::log(200.0) + 2.0 * std::log(10.0)) / 0.01)));
  CHECK(game_iterations(0.1, 0.1, 3, 200) == game_iterations(0.1, 0.1, 200, 3));
  CHECK(game_iterations(0.2, 0.1, 10, 10, 2.0) == game_iterations(0.1, 0.1, 10, 10));
  CHECK_THROWS_AS(game_iterations(0.0, 0.1, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(game_iterations(0.1, 1.0, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(game_iterations(0.1, 0.0, 2, 2), InvalidArgument);
}

TEST_CASE("duality gap examples") {
  const SparseGameMatrix swap = from_dense({{0, 1}, {1, 0}});
  CHECK(duality_gap(swap, SimplexPoint::Uniform(2), SimplexPoint::Uniform(2)) == 0.0);
  CHECK(duality_gap(swap, SimplexPoint::Vertex(2, 0), SimplexPoint::Vertex(2, 0)) == 1.0);
  const SparseGameMatrix pennies = from_dense({{1, -1}, {-1, 1}});
  CHECK(duality_gap(pennies, SimplexPoint::Uniform(2), SimplexPoint::Uniform(2)) == 0.0);
  CHECK_THROWS_AS(duality_gap(pennies, SimplexPoint::Uniform(3), SimplexPoint::Uniform(2)),
                  InvalidArgument);

  ReadCounter counter;
  const GapDetail d = evaluate_gap(pennies, SimplexPoint::Uniform(2), SimplexPoint::Uniform(2),
                                   counter);
  CHECK(counter.read(ReadScope::kVerification) == pennies.nonzeros());
  CHECK(counter.read(ReadScope::kSolver) == 0);
  CHECK(d.value == 0.0);
}

TEST_CASE("duality gap on random 3x3 games against the equilibrium oracle") {
  std::mt19937_64 gen(33);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    oracle::Matrix a(3, std::vector<double>(3));
    for (auto& r : a) {
      for (double& v : r) v = u(gen);
    }
    const SparseGameMatrix m = from_dense(a);
    std::vector<double> x(3), w(3);
    for (double& v : x) v = u(gen) + 1.5;
    for (double& v : w) v = u(gen) + 1.5;
    CHECK(duality_gap(m, normalized(x), normalized(w)) >=
          0.0);
    const auto eq = oracle::solve_game(a);
    REQUIRE(eq.has_value());
    ++solved;
    CHECK(duality_gap(m, SimplexPoint(eq->x), SimplexPoint(eq->omega)) <= 1e-7);
  }
  CHECK(solved == 100);
}

TEST_CASE("solver on small games") {
  GameOptions opt;
  opt.seed = 3;
  opt.epsilon = 0.05;
  const GameSolution pennies = solve_matrix_game(from_dense({{1, -1}, {-1, 1}}), opt);
  CHECK(pennies.iterations == game_iterations(0.05, 0.1, 2, 2));
  CHECK(pennies.gap <= 0.05);
  CHECK(std::abs(pennies.value_estimate) <= 0.05);
  CHECK(pennies.hannan_holds);

  const oracle::Matrix id{{1, 0}, {0, 1}};
  const auto eq = oracle::solve_game(id);
  REQUIRE(eq.has_value());
  CHECK(eq->value == doctest::Approx(0.5));
  opt.epsilon = 0.1;
  const GameSolution identity = solve_matrix_game(from_dense(id), opt);
  CHECK(identity.gap <= 0.1);
  CHECK(identity.lower_value <= eq->value + 1e-12);
  CHECK(identity.upper_value >= eq->value - 1e-12);
  CHECK(std::abs(identity.value_estimate - eq->value) <= 0.1);

  GameOptions bad;
  bad.epsilon = -1.0;
  CHECK_THROWS_AS(solve_matrix_game(from_dense(id), bad), InvalidArgument);
  bad.epsilon = 0.1;
  bad.sigma = 1.0;
  CHECK_THROWS_AS(solve_matrix_game(from_dense(id), bad), InvalidArgument);
  CHECK_THROWS_AS(solve_matrix_game(from_dense({{1, 2}}), GameOptions{}), InvalidArgument);
}

TEST_CASE("solver results are consistent with an independent dense evaluation") {
  const SparseGameMatrix a = random_sparse_game(40, 30, 4, 8);
  GameOptions opt;
  opt.seed = 1;
  opt.iterations = 3000;
  const GameSolution s = solve_matrix_game(a, opt);
  const oracle::Matrix d = to_dense(a);
  double upper = -1e300, lower = 1e300, value = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double ax = 0.0;
    for (std::size_t j = 0; j < d[i].size(); ++j) ax += d[i][j] * s.column_strategy[j];
    upper = std::max(upper, ax);
    value += s.row_strategy[i] * ax;
  }
  for (std::size_t j = 0; j < d.front().size(); ++j) {
    double wa = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) wa += s.row_strategy[i] * d[i][j];
    lower = std::min(lower, wa);
  }
  CHECK(s.upper_value == doctest::Approx(upper).epsilon(1e-12));
  CHECK(s.lower_value == doctest::Approx(lower).epsilon(1e-12));
  CHECK(s.value_estimate == doctest::Approx(value).epsilon(1e-12));
  CHECK(s.gap == doctest::Approx(upper - lower).epsilon(1e-12));
  CHECK(s.verification_reads == a.nonzeros());
  CHECK(s.hannan_holds);
  // Empirical frequencies over N plays are multiples of 1/N.
  for (double v : s.column_strategy.weights()) {
    const double scaled = v * 3000.0;
    CHECK(std::abs(scaled - std::round(scaled)) <= 1e-9);
  }
}

TEST_CASE("solver read counter respects the per-step budget") {
  const SparseGameMatrix a = random_sparse_game(200, 200, 10, 1);
  GameOptions opt;
  opt.seed = 5;
  opt.iterations = 1000;
  opt.record_trace = true;
  const GameSolution s = solve_matrix_game(a, opt);
  CHECK(s.elements_read <= 2 * a.max_line_nonzeros() * s.iterations);
  CHECK(s.elements_read > 0);
  REQUIRE(s.trace.has_value());
  const RunTrace& t = *s.trace;
  CHECK(t.complete());
  std::uint64_t previous = 0;
  for (const auto& r : t.records()) {
    CHECK(r.reads_solver >= previous);
    previous = r.reads_solver;
    const bool power_of_two = (r.step & (r.step - 1)) == 0;
    CHECK(r.gap.has_value() == (power_of_two || r.step == 1000));
  }
  CHECK(t.back().reads_solver == s.elements_read);
  CHECK(*t.back().gap == doctest::Approx(s.gap));
}

TEST_CASE("solver is deterministic per seed") {
  const SparseGameMatrix a = random_sparse_game(30, 30, 3, 2);
  GameOptions opt;
  opt.seed = 17;
  opt.iterations = 500;
  const GameSolution x = solve_matrix_game(a, opt);
  const GameSolution y = solve_matrix_game(a, opt);
  CHECK(x.column_strategy.vector() == y.column_strategy.vector());
  CHECK(x.elements_read == y.elements_read);
  opt.seed = 18;
  const GameSolution z = solve_matrix_game(a, opt);
  CHECK(x.column_strategy.vector() != z.column_strategy.vector());
}

TEST_CASE("pagerank on a 3-cycle") {
  const SparseGameMatrix p = from_dense({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  GameOptions opt;
  opt.epsilon = 0.05;
  opt.seed = 2;
  const PageRankResult r = pagerank_via_game(p, opt);
  CHECK(r.residual <= 0.05);
  for (double v : r.ranking.weights()) CHECK(std::abs(v - 1.0 / 3.0) <= 0.1);
}

TEST_CASE("pagerank on the identity") {
  const SparseGameMatrix p = from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const PageRankResult r = pagerank_via_game(p, GameOptions{});
  CHECK(r.residual == 0.0);
}

TEST_CASE("pagerank on a random 50-node graph against power iteration") {
  const SparseGameMatrix p = random_link_matrix(50, 4, 21);
  const oracle::Matrix dense = to_dense(p);
  const std::vector<double> pi = oracle::power_iteration(dense);
  const SparseGameMatrix g = stationarity_game(p);
  CHECK(duality_gap(g, SimplexPoint(pi), SimplexPoint::Uniform(50)) <= 1e-8);

  GameOptions opt;
  opt.seed = 4;
  const PageRankResult r = pagerank_via_game(p, opt);
  // Independent residual of the returned ranking.
  double residual = -1e300;
  for (std::size_t j = 0; j < 50; ++j) {
    double s = -r.ranking[j];
    for (std::size_t i = 0; i < 50; ++i) s += dense[i][j] * r.ranking[i];
    residual = std::max(residual, s);
  }
  CHECK(r.residual == doctest::Approx(residual).epsilon(1e-12));
  CHECK(r.residual <= opt.epsilon);
}

TEST_CASE("pagerank input validation") {
  CHECK_THROWS_AS(validate_row_stochastic(from_dense({{0.5, 0.4}, {0.0, 1.0}})), InvalidArgument);
  CHECK_THROWS_AS(validate_row_stochastic(from_dense({{1.5, -0.5}, {0.0, 1.0}})), InvalidArgument);
  CHECK_THROWS_AS(validate_row_stochastic(from_dense({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}})),
                  InvalidArgument);
  validate_row_stochastic(from_dense({{0.5, 0.5 + 1e-10}, {0.0, 1.0}}));
  CHECK_THROWS_AS(pagerank_via_game(from_dense({{0.5, 0.4}, {0.0, 1.0}}), GameOptions{}),
                  InvalidArgument);
  const SparseGameMatrix g = stationarity_game(from_dense({{0.5, 0.5}, {0.0, 1.0}}));
  CHECK(g.entry_bound() == 1.0);
  const oracle::Matrix d = to_dense(g);
  CHECK(d == oracle::Matrix{{-0.5, 0.0}, {0.5, 0.0}});
}
