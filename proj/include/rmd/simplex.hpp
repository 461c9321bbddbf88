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

// Entropic prox machinery on the (scaled) probability simplex.
//
// The potential is V(x) = ln n + sum_i x_i ln x_i, whose Fenchel-type dual
//
//   W_beta(y) = sup_{x in S_n(1)} { <y, x> - beta V(x) }
//             = beta ln( (1/n) sum_i exp(y_i / beta) )
//
// is the smoothed maximum of y. Its gradient is the softmax of y / beta and is
// the map from accumulated dual vectors to primal iterates.

#ifndef RMD_SIMPLEX_HPP_
#define RMD_SIMPLEX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace rmd {

// Relative tolerance for the mass constraint of a SimplexPoint.
inline constexpr double kMassTolerance = 1e-9;

// A nonnegative vector whose entries sum to a prescribed mass.
class SimplexPoint {
 public:
  // Throws InvalidArgument on an empty vector, a negative or non-finite
  // entry, a non-positive mass, or a sum differing from mass by more than
  // kMassTolerance (relative).
  explicit SimplexPoint(std::vector<double> weights, double mass = 1.0);

  static SimplexPoint Uniform(std::size_t n, double mass = 1.0);
  static SimplexPoint Vertex(std::size_t n, std::size_t index,
                             double mass = 1.0);

  std::size_t size() const { return weights_.size(); }
  double mass() const { return mass_; }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  const std::vector<double>& vector() const { return weights_; }

 private:
  std::vector<double> weights_;
  double mass_;
};

// x_i = exp(y_i / beta) / sum_l exp(y_l / beta), evaluated with a max shift
// so that no finite y overflows.
SimplexPoint softmax_prox(std::span<const double> y, double beta);

// beta ln((1/n) sum exp(y_i / beta)); lies in [max y - beta ln n, max y].
double smoothed_max(std::span<const double> y, double beta);

// V(x) = ln n + sum x_i ln x_i (0 ln 0 = 0) for a unit-mass point.
double entropy_v(const SimplexPoint& x);

struct SimplexBlock {
  std::size_t size;
  double mass;
};

// Product of scaled simplices S_{n_1}(d_1) x ... x S_{n_m}(d_m).
class ProductSimplexSpec {
 public:
  explicit ProductSimplexSpec(std::vector<SimplexBlock> blocks);

  const std::vector<SimplexBlock>& blocks() const { return blocks_; }
  std::size_t total_size() const { return total_size_; }
  double max_mass() const;
  double total_mass() const;

 private:
  std::vector<SimplexBlock> blocks_;
  std::size_t total_size_ = 0;
};

// Block entropy sum_j ( d_j ln n_j + sum_i z_i ln(z_i / d_j) ).
double product_entropy_v(std::span<const SimplexPoint> blocks);

// argmax over the product set of <y, z> - beta V(z) with the block entropy
// above. Block j of the result is d_j * softmax(y^j / beta) and sums to d_j.
std::vector<SimplexPoint> product_simplex_prox(std::span<const double> y,
                                               double beta,
                                               const ProductSimplexSpec& spec);

}  // namespace rmd

#endif  // RMD_SIMPLEX_HPP_
