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

#ifndef RMD_SUBGRADIENT_HPP_
#define RMD_SUBGRADIENT_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace rmd {

// A (stochastic) subgradient with a certified bound on its infinity norm.
//
// Storage is dense or sparse; construction throws ContractViolation when the
// actual infinity norm exceeds the declared bound.
class SubgradientSample {
 public:
  static SubgradientSample Dense(std::vector<double> entries, double bound);
  static SubgradientSample Sparse(std::size_t dimension,
                                  std::span<const std::size_t> indices,
                                  std::span<const double> values, double bound);

  std::size_t dimension() const { return dimension_; }
  double bound() const { return bound_; }
  bool is_sparse() const { return sparse_; }
  double inf_norm() const;

  // Number of stored entries (n for dense samples).
  std::size_t stored() const { return values_.size(); }

  template <class F>
  void for_each_entry(F&& f) const {
    if (sparse_) {
      for (std::size_t k = 0; k < values_.size(); ++k) f(indices_[k], values_[k]);
    } else {
      for (std::size_t i = 0; i < values_.size(); ++i) f(i, values_[i]);
    }
  }

  std::vector<double> to_dense() const;

 private:
  SubgradientSample() = default;
  void check_bound() const;

  std::size_t dimension_ = 0;
  double bound_ = 0.0;
  bool sparse_ = false;
  std::vector<std::size_t> indices_;
  std::vector<double> values_;
};

}  // namespace rmd

#endif  // RMD_SUBGRADIENT_HPP_
