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

#include "rmd/schedule.hpp"

#include <cmath>
#include <string>

#include "rmd/errors.hpp"

namespace rmd {
namespace {

void check_common(double grad_bound, std::size_t n, const char* what) {
  if (n < 2) {
    throw InvalidArgument(std::string(what) + ": dimension must be at least 2");
  }
  if (!(grad_bound > 0.0) || !std::isfinite(grad_bound)) {
    throw InvalidArgument(std::string(what) + ": gradient bound must be positive");
  }
}

}  // namespace

double adaptive_beta(std::size_t t, double grad_bound, std::size_t n) {
  check_common(grad_bound, n, "adaptive_beta");
  if (t < 1) throw InvalidArgument("adaptive_beta: t must be at least 1");
  return grad_bound * std::sqrt(static_cast<double>(t)) /
         std::sqrt(std::log(static_cast<double>(n)));
}

double nonadaptive_gamma(double horizon, double grad_bound, std::size_t n) {
  check_common(grad_bound, n, "nonadaptive_gamma");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw InvalidArgument("nonadaptive_gamma: horizon must be positive");
  }
  return std::sqrt(2.0 * std::log(static_cast<double>(n)) / horizon) / grad_bound;
}

}  // namespace rmd
