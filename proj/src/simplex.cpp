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

#include "rmd/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rmd/errors.hpp"

namespace rmd {
namespace {

void check_logits(std::span<const double> y, double beta, const char* what) {
  if (y.empty()) throw InvalidArgument(std::string(what) + ": empty input");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument(std::string(what) + ": beta must be positive and finite");
  }
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw InvalidArgument(std::string(what) + ": non-finite coordinate");
    }
  }
}

}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> weights, double mass)
    : weights_(std::move(weights)), mass_(mass) {
  if (weights_.empty()) throw InvalidArgument("SimplexPoint: empty weights");
  if (!(mass_ > 0.0) || !std::isfinite(mass_)) {
    throw InvalidArgument("SimplexPoint: mass must be positive");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("SimplexPoint: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - mass_) > kMassTolerance * mass_) {
    throw InvalidArgument("SimplexPoint: weights sum to " + std::to_string(sum) +
                          ", expected " + std::to_string(mass_));
  }
}

SimplexPoint SimplexPoint::Uniform(std::size_t n, double mass) {
  if (n == 0) throw InvalidArgument("SimplexPoint::Uniform: n must be positive");
  return SimplexPoint(std::vector<double>(n, mass / static_cast<double>(n)), mass);
}

SimplexPoint SimplexPoint::Vertex(std::size_t n, std::size_t index, double mass) {
  if (index >= n) throw InvalidArgument("SimplexPoint::Vertex: index out of range");
  std::vector<double> w(n, 0.0);
  w[index] = mass;
  return SimplexPoint(std::move(w), mass);
}

SimplexPoint softmax_prox(std::span<const double> y, double beta) {
  check_logits(y, beta, "softmax_prox");
  const double top = *std::max_element(y.begin(), y.end());
  std::vector<double> x(y.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    x[i] = std::exp((y[i] - top) / beta);
    sum += x[i];
  }
  // sum >= 1 because the maximal coordinate contributes exp(0).
  for (double& v : x) v /= sum;
  return SimplexPoint(std::move(x));
}

double smoothed_max(std::span<const double> y, double beta) {
  check_logits(y, beta, "smoothed_max");
  const double top = *std::max_element(y.begin(), y.end());
  double sum = 0.0;
  for (double v : y) sum += std::exp((v - top) / beta);
  return top + beta * (std::log(sum) - std::log(static_cast<double>(y.size())));
}

double entropy_v(const SimplexPoint& x) {
  if (std::abs(x.mass() - 1.0) > kMassTolerance) {
    throw InvalidArgument("entropy_v: point must have unit mass");
  }
  const double log_n = std::log(static_cast<double>(x.size()));
  double v = log_n;
  for (double w : x.weights()) {
    if (w > 0.0) v += w * std::log(w);
  }
  return std::clamp(v, 0.0, log_n);
}

ProductSimplexSpec::ProductSimplexSpec(std::vector<SimplexBlock> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("ProductSimplexSpec: no blocks");
  for (const auto& b : blocks_) {
    if (b.size == 0) throw InvalidArgument("ProductSimplexSpec: empty block");
    if (!(b.mass > 0.0) || !std::isfinite(b.mass)) {
      throw InvalidArgument("ProductSimplexSpec: block mass must be positive");
    }
    total_size_ += b.size;
  }
}

double ProductSimplexSpec::max_mass() const {
  double m = 0.0;
  for (const auto& b : blocks_) m = std::max(m, b.mass);
  return m;
}

double ProductSimplexSpec::total_mass() const {
  double m = 0.0;
  for (const auto& b : blocks_) m += b.mass;
  return m;
}

double product_entropy_v(std::span<const SimplexPoint> blocks) {
  double v = 0.0;
  for (const auto& z : blocks) {
    const double d = z.mass();
    v += d * std::log(static_cast<double>(z.size()));
    for (double w : z.weights()) {
      if (w > 0.0) v += w * std::log(w / d);
    }
  }
  return v;
}

std::vector<SimplexPoint> product_simplex_prox(std::span<const double> y,
                                               double beta,
                                               const ProductSimplexSpec& spec) {
  if (y.size() != spec.total_size()) {
    throw InvalidArgument("product_simplex_prox: y has length " +
                          std::to_string(y.size()) + ", spec expects " +
                          std::to_string(spec.total_size()));
  }
  std::vector<SimplexPoint> out;
  out.reserve(spec.blocks().size());
  std::size_t offset = 0;
  for (const auto& block : spec.blocks()) {
    SimplexPoint unit = softmax_prox(y.subspan(offset, block.size), beta);
    std::vector<double> scaled(unit.weights().begin(), unit.weights().end());
    for (double& v : scaled) v *= block.mass;
    out.emplace_back(std::move(scaled), block.mass);
    offset += block.size;
  }
  return out;
}

}  // namespace rmd
