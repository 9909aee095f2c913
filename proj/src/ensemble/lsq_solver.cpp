// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/ensemble/lsq_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "goowe/core/types.hpp"
#include "goowe/simd/kernels.hpp"

namespace goowe {

DenseMatrix DenseMatrix::from_row_major(std::span<const double> values, std::size_t rows,
                                        std::size_t cols) {
  if (values.size() != rows * cols) throw ConsistencyError("matrix buffer has the wrong size");
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = values[r * cols + c];
  return m;
}

namespace {

// One Householder reflector H = I - beta v v' acting on rows [offset, rows).
struct Reflector {
  std::size_t offset = 0;
  double beta = 0.0;
  std::vector<double> v;

  void apply(double* x) const {
    if (beta == 0.0) return;
    const auto& k = simd::kernels();
    const double tau = beta * k.dot(v.data(), x + offset, v.size());
    k.axpy(-tau, v.data(), x + offset, v.size());
  }
};

// Reduces column `col` of `w` below `row`; returns the reflector and writes the
// new diagonal into w(row, col).
Reflector householder(DenseMatrix& w, std::size_t row, std::size_t col) {
  Reflector h;
  h.offset = row;
  const std::size_t len = w.rows() - row;
  double* x = w.column(col) + row;
  const double norm = std::sqrt(simd::kernels().dot(x, x, len));
  if (norm == 0.0) return h;
  const double alpha = x[0] > 0 ? -norm : norm;
  h.v.assign(x, x + len);
  h.v[0] -= alpha;
  const double vv = simd::kernels().dot(h.v.data(), h.v.data(), len);
  if (vv == 0.0) return h;
  h.beta = 2.0 / vv;
  x[0] = alpha;
  std::fill(x + 1, x + len, 0.0);
  return h;
}

}  // namespace

LeastSquaresResult solve_least_squares(const DenseMatrix& a, std::span<const double> b,
                                       double rank_tolerance) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw ConsistencyError("right-hand side length does not match matrix rows");
  LeastSquaresResult out;
  out.x.assign(cols, 0.0);
  if (cols == 0 || rows == 0) return out;

  const auto& k = simd::kernels();
  DenseMatrix w = a;
  std::vector<double> c(b.begin(), b.end());
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);

  const std::size_t steps = std::min(rows, cols);
  std::vector<Reflector> reflectors;
  reflectors.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    // Pivot: the trailing column with the largest remaining norm.
    std::size_t best = s;
    double best_norm = -1.0;
    for (std::size_t j = s; j < cols; ++j) {
      const double* col = w.column(j) + s;
      const double n2 = k.dot(col, col, rows - s);
      if (n2 > best_norm) {
        best_norm = n2;
        best = j;
      }
    }
    if (best != s) {
      std::swap_ranges(w.column(s), w.column(s) + rows, w.column(best));
      std::swap(perm[s], perm[best]);
    }
    Reflector h = householder(w, s, s);
    for (std::size_t j = s + 1; j < cols; ++j) h.apply(w.column(j));
    h.apply(c.data());
    reflectors.push_back(std::move(h));
  }

  const double r00 = std::abs(w(0, 0));
  std::size_t rank = 0;
  if (r00 > 0.0) {
    while (rank < steps && std::abs(w(rank, rank)) > rank_tolerance * r00) ++rank;
  }
  out.rank = rank;
  if (rank == 0) return out;

  std::vector<double> z(cols, 0.0);
  if (rank == cols) {
    for (std::size_t i = cols; i-- > 0;) {
      double s = c[i];
      for (std::size_t j = i + 1; j < cols; ++j) s -= w(i, j) * z[j];
      z[i] = s / w(i, i);
    }
  } else {
    // [R11 R12]' (cols x rank) = Z [T; 0]; then [R11 R12] = [T' 0] Z'.
    DenseMatrix t(cols, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i; j < cols; ++j) t(j, i) = w(i, j);
    std::vector<Reflector> zr;
    zr.reserve(rank);
    for (std::size_t s = 0; s < rank; ++s) {
      Reflector h = householder(t, s, s);
      for (std::size_t j = s + 1; j < rank; ++j) h.apply(t.column(j));
      zr.push_back(std::move(h));
    }
    // Forward substitution with T' (lower triangular).
    for (std::size_t i = 0; i < rank; ++i) {
      double s = c[i];
      for (std::size_t j = 0; j < i; ++j) s -= t(j, i) * z[j];
      z[i] = s / t(i, i);
    }
    // z <- Z [y; 0], applying the reflectors in reverse (each is symmetric).
    for (std::size_t s = rank; s-- > 0;) zr[s].apply(z.data());
  }
  for (std::size_t j = 0; j < cols; ++j) out.x[perm[j]] = z[j];
  return out;
}

}  // namespace goowe
