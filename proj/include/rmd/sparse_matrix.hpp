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

#ifndef RMD_SPARSE_MATRIX_HPP_
#define RMD_SPARSE_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rmd {

enum class ReadScope { kSolver, kVerification };

// Exact count of matrix-entry reads, kept per run. Solver reads and
// duality-gap verification reads are tallied separately.
class ReadCounter {
 public:
  void add(ReadScope scope, std::uint64_t count) {
    (scope == ReadScope::kSolver ? solver_ : verification_) += count;
  }
  std::uint64_t read(ReadScope scope) const {
    return scope == ReadScope::kSolver ? solver_ : verification_;
  }

 private:
  std::uint64_t solver_ = 0;
  std::uint64_t verification_ = 0;
};

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

// Nonzeros of one row or one column.
struct SparseLine {
  std::span<const std::size_t> indices;
  std::span<const double> values;
  std::size_t size() const { return indices.size(); }
};

// Sparse matrix with both row-major (CSR) and column-major (CSC) layouts.
//
// Duplicate coordinates are summed and exact zeros dropped. The entry bound M
// defaults to max |a_ij| (1 for an all-zero matrix) and may be declared larger.
// Row and column access goes through a ReadCounter so every entry touched by
// an algorithm is accounted for.
class SparseGameMatrix {
 public:
  SparseGameMatrix(std::size_t rows, std::size_t cols,
                   std::vector<MatrixEntry> entries,
                   std::optional<double> entry_bound = std::nullopt);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return csr_values_.size(); }
  double entry_bound() const { return entry_bound_; }
  double max_abs_entry() const { return max_abs_; }

  // Average nonzeros per row and per column: (nnz/rows + nnz/cols) / 2.
  double sparsity() const;
  // Largest nonzero count of any single row or column.
  std::size_t max_line_nonzeros() const;
  std::size_t row_nonzeros(std::size_t i) const;
  std::size_t col_nonzeros(std::size_t j) const;

  SparseLine row(std::size_t i, ReadCounter& counter, ReadScope scope) const;
  SparseLine col(std::size_t j, ReadCounter& counter, ReadScope scope) const;

  // Entries in row-major order; uncounted (I/O and construction only).
  std::vector<MatrixEntry> entries() const;
  std::vector<MatrixEntry> entries_column_major() const;

  // Same entries with a different declared bound.
  SparseGameMatrix with_entry_bound(double bound) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  double entry_bound_;
  double max_abs_ = 0.0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> csr_cols_;
  std::vector<double> csr_values_;
  std::vector<std::size_t> col_ptr_;
  std::vector<std::size_t> csc_rows_;
  std::vector<double> csc_values_;
};

// Matrix Market "matrix coordinate real general" (integer is accepted too).
SparseGameMatrix read_matrix_market(std::istream& in,
                                    std::optional<double> entry_bound = std::nullopt);
SparseGameMatrix load_matrix_market(const std::string& path,
                                    std::optional<double> entry_bound = std::nullopt);
void write_matrix_market(std::ostream& out, const SparseGameMatrix& a);
void save_matrix_market(const std::string& path, const SparseGameMatrix& a);

// rows x cols matrix with `per_row` distinct uniformly placed nonzeros in
// every row, values uniform in [-1, 1). Declared entry bound 1.
SparseGameMatrix random_sparse_game(std::size_t rows, std::size_t cols,
                                    std::size_t per_row, std::uint64_t seed);

// Transition matrix of a random directed graph: every node links to
// `out_degree` distinct other nodes, each with probability 1 / out_degree.
SparseGameMatrix random_link_matrix(std::size_t nodes, std::size_t out_degree,
                                    std::uint64_t seed);

}  // namespace rmd

#endif  // RMD_SPARSE_MATRIX_HPP_
