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

#ifndef RMD_RANDOM_HPP_
#define RMD_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace rmd {

// Seeded random stream owned by a single run.
//
// Only the raw std::mt19937_64 output is used (its sequence is fixed by the
// standard); all derived variates are computed here so that results are
// bitwise reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform_open() {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
  }

  // Uniform on {0, ..., n-1}; n must be positive.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform_open() < p; }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF draw from a categorical distribution given by nonnegative
// weights (need not be normalized). Zero-weight cells are never returned.
std::size_t sample_categorical(std::span<const double> weights, Rng& rng);

}  // namespace rmd

#endif  // RMD_RANDOM_HPP_
