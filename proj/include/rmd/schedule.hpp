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

#ifndef RMD_SCHEDULE_HPP_
#define RMD_SCHEDULE_HPP_

#include <cstddef>

namespace rmd {

// Temperature of the adaptive (anytime) schedule: M sqrt(t) / sqrt(ln n).
// Requires t >= 1, M > 0, n >= 2.
double adaptive_beta(std::size_t t, double grad_bound, std::size_t n);

// Constant step of the horizon-aware schedule: sqrt(2 ln n / N) / M, used
// with beta == 1. The horizon is real-valued so the formula can be probed
// off the integers; production callers pass an integer N >= 1.
double nonadaptive_gamma(double horizon, double grad_bound, std::size_t n);

}  // namespace rmd

#endif  // RMD_SCHEDULE_HPP_
