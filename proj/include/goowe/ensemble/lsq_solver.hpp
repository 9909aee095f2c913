// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace goowe {

/// Small dense column-major matrix for the solver.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  /// Builds from a row-major buffer.
  static DenseMatrix from_row_major(std::span<const double> values, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[c * rows_ + r]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[c * rows_ + r]; }
  double* column(std::size_t c) noexcept { return data_.data() + c * rows_; }
  const double* column(std::size_t c) const noexcept { return data_.data() + c * rows_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct LeastSquaresResult {
  std::vector<double> x;
  std::size_t rank = 0;
};

/// Minimum-norm least-squares solution of `a x = b`.
///
/// Householder QR with column pivoting reveals the numerical rank: a diagonal
/// entry |R_kk| <= rank_tolerance * |R_00| ends the leading block. Full rank
/// is finished by back-substitution. A rank-deficient system is reduced to a
/// complete orthogonal decomposition A P = Q [T' 0] Z' so that the returned
/// x is the minimum-norm minimizer of ||a x - b||.
LeastSquaresResult solve_least_squares(const DenseMatrix& a, std::span<const double> b,
                                       double rank_tolerance = 1e-10);

}  // namespace goowe
