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

#include "rmd/subgradient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rmd/errors.hpp"

namespace rmd {

SubgradientSample SubgradientSample::Dense(std::vector<double> entries,
                                           double bound) {
  SubgradientSample g;
  g.dimension_ = entries.size();
  g.bound_ = bound;
  g.values_ = std::move(entries);
  g.check_bound();
  return g;
}

SubgradientSample SubgradientSample::Sparse(std::size_t dimension,
                                            std::span<const std::size_t> indices,
                                            std::span<const double> values,
                                            double bound) {
  if (indices.size() != values.size()) {
    throw InvalidArgument("SubgradientSample: index/value length mismatch");
  }
  SubgradientSample g;
  g.dimension_ = dimension;
  g.bound_ = bound;
  g.sparse_ = true;
  g.indices_.assign(indices.begin(), indices.end());
  g.values_.assign(values.begin(), values.end());
  for (std::size_t i : g.indices_) {
    if (i >= dimension) throw InvalidArgument("SubgradientSample: index out of range");
  }
  g.check_bound();
  return g;
}

double SubgradientSample::inf_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void SubgradientSample::check_bound() const {
  if (dimension_ == 0) throw InvalidArgument("SubgradientSample: empty");
  if (!(bound_ >= 0.0) || !std::isfinite(bound_)) {
    throw InvalidArgument("SubgradientSample: bound must be finite and nonnegative");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ContractViolation("SubgradientSample: non-finite entry");
  }
  const double norm = inf_norm();
  // A few ulps of slack so that r / p with r == bound * p is accepted.
  if (norm > bound_ * (1.0 + 1e-12)) {
    throw ContractViolation("SubgradientSample: infinity norm " +
                            std::to_string(norm) + " exceeds declared bound " +
                            std::to_string(bound_));
  }
}

std::vector<double> SubgradientSample::to_dense() const {
  std::vector<double> out(dimension_, 0.0);
  for_each_entry([&](std::size_t i, double v) { out[i] += v; });
  return out;
}

}  // namespace rmd
