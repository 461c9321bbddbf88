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

#include "rmd/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "rmd/errors.hpp"
#include "rmd/random.hpp"

namespace rmd {

SparseGameMatrix::SparseGameMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<MatrixEntry> entries,
                                   std::optional<double> entry_bound)
    : rows_(rows), cols_(cols), entry_bound_(1.0) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("SparseGameMatrix: dimensions must be positive");
  }
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw InvalidArgument("SparseGameMatrix: entry (" + std::to_string(e.row) +
                            ", " + std::to_string(e.col) + ") out of range");
    }
    if (!std::isfinite(e.value)) {
      throw InvalidArgument("SparseGameMatrix: non-finite entry");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  // Sum duplicates in place, then drop exact zeros.
  std::vector<MatrixEntry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const MatrixEntry& e) { return e.value == 0.0; });

  row_ptr_.assign(rows + 1, 0);
  col_ptr_.assign(cols + 1, 0);
  for (const auto& e : merged) {
    ++row_ptr_[e.row + 1];
    ++col_ptr_[e.col + 1];
    max_abs_ = std::max(max_abs_, std::abs(e.value));
  }
  for (std::size_t i = 0; i < rows; ++i) row_ptr_[i + 1] += row_ptr_[i];
  for (std::size_t j = 0; j < cols; ++j) col_ptr_[j + 1] += col_ptr_[j];

  const std::size_t nnz = merged.size();
  csr_cols_.resize(nnz);
  csr_values_.resize(nnz);
  csc_rows_.resize(nnz);
  csc_values_.resize(nnz);
  std::vector<std::size_t> col_fill(col_ptr_.begin(), col_ptr_.end() - 1);
  // Row-major order of `merged` keeps each CSC column sorted by row.
  for (std::size_t k = 0; k < nnz; ++k) {
    const auto& e = merged[k];
    csr_cols_[k] = e.col;
    csr_values_[k] = e.value;
    csc_rows_[col_fill[e.col]] = e.row;
    csc_values_[col_fill[e.col]++] = e.value;
  }

  if (entry_bound) {
    if (!(*entry_bound > 0.0) || !std::isfinite(*entry_bound)) {
      throw InvalidArgument("SparseGameMatrix: entry bound must be positive");
    }
    if (max_abs_ > *entry_bound) {
      throw InvalidArgument("SparseGameMatrix: |a_ij| = " + std::to_string(max_abs_) +
                            " exceeds declared bound " +
                            std::to_string(*entry_bound));
    }
    entry_bound_ = *entry_bound;
  } else {
    entry_bound_ = max_abs_ > 0.0 ? max_abs_ : 1.0;
  }
}

double SparseGameMatrix::sparsity() const {
  const double nnz = static_cast<double>(nonzeros());
  return 0.5 * (nnz / static_cast<double>(rows_) + nnz / static_cast<double>(cols_));
}

std::size_t SparseGameMatrix::max_line_nonzeros() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < rows_; ++i) m = std::max(m, row_nonzeros(i));
  for (std::size_t j = 0; j < cols_; ++j) m = std::max(m, col_nonzeros(j));
  return m;
}

std::size_t SparseGameMatrix::row_nonzeros(std::size_t i) const {
  return row_ptr_.at(i + 1) - row_ptr_.at(i);
}

std::size_t SparseGameMatrix::col_nonzeros(std::size_t j) const {
  return col_ptr_.at(j + 1) - col_ptr_.at(j);
}

SparseLine SparseGameMatrix::row(std::size_t i, ReadCounter& counter,
                                 ReadScope scope) const {
  if (i >= rows_) throw InvalidArgument("SparseGameMatrix::row: index out of range");
  const std::size_t begin = row_ptr_[i];
  const std::size_t count = row_ptr_[i + 1] - begin;
  counter.add(scope, count);
  return SparseLine{std::span(csr_cols_).subspan(begin, count),
                    std::span(csr_values_).subspan(begin, count)};
}

SparseLine SparseGameMatrix::col(std::size_t j, ReadCounter& counter,
                                 ReadScope scope) const {
  if (j >= cols_) throw InvalidArgument("SparseGameMatrix::col: index out of range");
  const std::size_t begin = col_ptr_[j];
  const std::size_t count = col_ptr_[j + 1] - begin;
  counter.add(scope, count);
  return SparseLine{std::span(csc_rows_).subspan(begin, count),
                    std::span(csc_values_).subspan(begin, count)};
}

std::vector<MatrixEntry> SparseGameMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(nonzeros());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      out.push_back({i, csr_cols_[k], csr_values_[k]});
    }
  }
  return out;
}

std::vector<MatrixEntry> SparseGameMatrix::entries_column_major() const {
  std::vector<MatrixEntry> out;
  out.reserve(nonzeros());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      out.push_back({csc_rows_[k], j, csc_values_[k]});
    }
  }
  return out;
}

SparseGameMatrix SparseGameMatrix::with_entry_bound(double bound) const {
  return SparseGameMatrix(rows_, cols_, entries(), bound);
}

SparseGameMatrix read_matrix_market(std::istream& in,
                                    std::optional<double> entry_bound) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("Matrix Market: empty input");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  };
  if (tag != "%%MatrixMarket" || lower(object) != "matrix" ||
      lower(format) != "coordinate") {
    throw InvalidArgument("Matrix Market: expected '%%MatrixMarket matrix coordinate' banner");
  }
  if (lower(field) != "real" && lower(field) != "integer") {
    throw InvalidArgument("Matrix Market: unsupported field '" + field + "'");
  }
  if (lower(symmetry) != "general") {
    throw InvalidArgument("Matrix Market: unsupported symmetry '" + symmetry + "'");
  }

  // Skip comments up to the size line.
  do {
    if (!std::getline(in, line)) throw InvalidArgument("Matrix Market: missing size line");
  } while (line.empty() || line[0] == '%');

  std::size_t rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> nnz)) {
      throw InvalidArgument("Matrix Market: malformed size line");
    }
  }
  std::vector<MatrixEntry> entries;
  entries.reserve(nnz);
  while (entries.size() < nnz && std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    std::size_t r = 0, c = 0;
    double v = 0.0;
    if (!(entry >> r >> c >> v) || r == 0 || c == 0) {
      throw InvalidArgument("Matrix Market: malformed entry '" + line + "'");
    }
    entries.push_back({r - 1, c - 1, v});
  }
  if (entries.size() != nnz) {
    throw InvalidArgument("Matrix Market: expected " + std::to_string(nnz) +
                          " entries, found " + std::to_string(entries.size()));
  }
  return SparseGameMatrix(rows, cols, std::move(entries), entry_bound);
}

SparseGameMatrix load_matrix_market(const std::string& path,
                                    std::optional<double> entry_bound) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path + "'");
  return read_matrix_market(in, entry_bound);
}

void write_matrix_market(std::ostream& out, const SparseGameMatrix& a) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << a.rows() << ' ' << a.cols() << ' ' << a.nonzeros() << '\n';
  out << std::setprecision(17);
  for (const auto& e : a.entries()) {
    out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
  }
}

void save_matrix_market(const std::string& path, const SparseGameMatrix& a) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write matrix file '" + path + "'");
  write_matrix_market(out, a);
}

namespace {

// `count` distinct values from {0, ..., range-1} excluding `skip`, in draw
// order.
std::vector<std::size_t> distinct_indices(std::size_t range, std::size_t count,
                                          std::optional<std::size_t> skip, Rng& rng) {
  std::vector<std::size_t> picked;
  picked.reserve(count);
  const std::size_t available = range - (skip ? 1 : 0);
  if (2 * count > available) {
    std::vector<std::size_t> pool;
    pool.reserve(available);
    for (std::size_t v = 0; v < range; ++v) {
      if (!skip || v != *skip) pool.push_back(v);
    }
    for (std::size_t k = 0; k < count; ++k) {
      std::swap(pool[k], pool[k + rng.uniform_index(pool.size() - k)]);
      picked.push_back(pool[k]);
    }
    return picked;
  }
  while (picked.size() < count) {
    const std::size_t v = rng.uniform_index(range);
    if (skip && v == *skip) continue;
    if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
  }
  return picked;
}

}  // namespace

SparseGameMatrix random_sparse_game(std::size_t rows, std::size_t cols,
                                    std::size_t per_row, std::uint64_t seed) {
  if (rows == 0 || cols == 0 || per_row == 0 || per_row > cols) {
    throw InvalidArgument("random_sparse_game: need 1 <= per_row <= cols");
  }
  Rng rng(seed);
  std::vector<MatrixEntry> entries;
  entries.reserve(rows * per_row);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j : distinct_indices(cols, per_row, std::nullopt, rng)) {
      double v = 2.0 * rng.uniform_open() - 1.0;
      entries.push_back({i, j, v});
    }
  }
  return SparseGameMatrix(rows, cols, std::move(entries), 1.0);
}

SparseGameMatrix random_link_matrix(std::size_t nodes, std::size_t out_degree,
                                    std::uint64_t seed) {
  if (nodes < 2 || out_degree == 0 || out_degree >= nodes) {
    throw InvalidArgument("random_link_matrix: need 1 <= out_degree < nodes");
  }
  Rng rng(seed);
  std::vector<MatrixEntry> entries;
  entries.reserve(nodes * out_degree);
  const double p = 1.0 / static_cast<double>(out_degree);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j : distinct_indices(nodes, out_degree, i, rng)) {
      entries.push_back({i, j, p});
    }
  }
  return SparseGameMatrix(nodes, nodes, std::move(entries));
}

}  // namespace rmd
