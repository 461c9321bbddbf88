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

#include "rmd/environments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "rmd/errors.hpp"

namespace rmd {
namespace {

void check_bound(double bound, const char* what) {
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw InvalidArgument(std::string(what) + ": bound must be positive and finite");
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<double> LossSequence::next_checked(const StepContext& ctx) {
  std::vector<double> loss = next_loss(ctx);
  if (loss.size() != dimension()) {
    throw ContractViolation(kind() + " emitted a loss of dimension " +
                            std::to_string(loss.size()) + " at step " +
                            std::to_string(ctx.step));
  }
  const double m = bound();
  for (double v : loss) {
    if (!std::isfinite(v) || std::abs(v) > m) {
      throw ContractViolation(kind() + " emitted |l_i| = " +
                              std::to_string(std::abs(v)) + " > M = " +
                              std::to_string(m) + " at step " +
                              std::to_string(ctx.step));
    }
  }
  return loss;
}

FixedListLosses::FixedListLosses(std::vector<std::vector<double>> rows,
                                 double bound)
    : rows_(std::move(rows)), dimension_(0), bound_(bound) {
  check_bound(bound, "FixedListLosses");
  if (rows_.empty()) throw InvalidArgument("FixedListLosses: no rows");
  dimension_ = rows_.front().size();
  if (dimension_ == 0) throw InvalidArgument("FixedListLosses: empty row");
  for (const auto& r : rows_) {
    if (r.size() != dimension_) {
      throw InvalidArgument("FixedListLosses: ragged rows");
    }
  }
}

std::vector<double> FixedListLosses::next_loss(const StepContext& ctx) {
  if (ctx.step == 0 || ctx.step > rows_.size()) {
    throw InvalidState("FixedListLosses: step " + std::to_string(ctx.step) +
                       " outside the list of " + std::to_string(rows_.size()));
  }
  return rows_[ctx.step - 1];
}

BernoulliArms::BernoulliArms(std::vector<double> means, std::uint64_t seed)
    : means_(std::move(means)), rng_(seed) {
  if (means_.empty()) throw InvalidArgument("BernoulliArms: no arms");
  for (double m : means_) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw InvalidArgument("BernoulliArms: means must lie in [0, 1]");
    }
  }
}

std::vector<double> BernoulliArms::next_loss(const StepContext&) {
  std::vector<double> loss(means_.size());
  for (std::size_t i = 0; i < means_.size(); ++i) {
    loss[i] = rng_.bernoulli(means_[i]) ? 1.0 : 0.0;
  }
  return loss;
}

BestResponseAdversary::BestResponseAdversary(std::size_t n, double magnitude)
    : n_(n), magnitude_(magnitude) {
  if (n == 0) throw InvalidArgument("BestResponseAdversary: n must be positive");
  check_bound(magnitude, "BestResponseAdversary");
}

std::vector<double> BestResponseAdversary::next_loss(const StepContext& ctx) {
  if (ctx.distribution.size() != n_) {
    throw InvalidArgument("BestResponseAdversary: distribution dimension mismatch");
  }
  const auto w = ctx.distribution.weights();
  // max_element returns the first maximum, i.e. the lowest index on ties.
  const auto target = static_cast<std::size_t>(
      std::max_element(w.begin(), w.end()) - w.begin());
  std::vector<double> loss(n_, 0.0);
  loss[target] = magnitude_;
  return loss;
}

SubgradientSample full_info_gradient(std::span<const double> loss, double bound) {
  check_bound(bound, "full_info_gradient");
  return SubgradientSample::Dense(std::vector<double>(loss.begin(), loss.end()),
                                  bound);
}

SubgradientSample bandit_gradient_estimate(const SimplexPoint& p,
                                           const BanditFeedback& feedback) {
  if (feedback.arm >= p.size()) {
    throw InvalidArgument("bandit_gradient_estimate: arm out of range");
  }
  if (!(feedback.loss >= 0.0 && feedback.loss <= 1.0)) {
    throw ContractViolation("bandit_gradient_estimate: loss outside [0, 1]");
  }
  const double prob = p[feedback.arm];
  if (!(prob > 0.0)) {
    throw ContractViolation("bandit_gradient_estimate: pulled arm has zero probability");
  }
  const double estimate = feedback.loss / prob;
  const std::size_t index = feedback.arm;
  return SubgradientSample::Sparse(p.size(), std::span(&index, 1),
                                   std::span(&estimate, 1), estimate);
}

double effective_bandit_m(std::size_t n) {
  if (n < 2) throw InvalidArgument("effective_bandit_m: need at least 2 arms");
  return std::sqrt(2.0 * static_cast<double>(n));
}

FixedListLosses load_loss_csv(const std::string& path, double bound) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open loss file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<double> row;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const std::string c = trim(cell);
        row.push_back(std::stod(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw InvalidArgument(path + ":" + std::to_string(line_no) +
                              ": not a number: '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return FixedListLosses(std::move(rows), bound);
}

ArmsConfig read_arms_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open arms config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("means") || !doc["means"].is_array()) {
    throw InvalidArgument(path + ": expected an object with a \"means\" array");
  }
  std::vector<double> means;
  for (const auto& v : doc["means"]) {
    if (!v.is_number()) throw InvalidArgument(path + ": means must be numbers");
    means.push_back(v.get<double>());
  }
  ArmsConfig config{std::move(means), std::nullopt};
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw InvalidArgument(path + ": seed must be a nonnegative integer");
    }
    config.seed = doc["seed"].get<std::uint64_t>();
  }
  return config;
}

BernoulliArms load_arms_config(const std::string& path,
                               std::uint64_t default_seed) {
  ArmsConfig config = read_arms_config(path);
  return BernoulliArms(std::move(config.means), config.seed.value_or(default_seed));
}

}  // namespace rmd
