// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/simd/kernels.hpp"

namespace goowe::simd {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double gaussian_terms_scalar(const double* x, const double* mean, const double* inv_var,
                             const double* log_var, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - mean[i];
    s += d * d * inv_var[i] + log_var[i];
  }
  return s;
}

void welford_update_scalar(const double* x, double* mean, double* m2, double weight,
                           double weight_after, std::size_t n) {
  const double r = weight / weight_after;
  for (std::size_t i = 0; i < n; ++i) {
    const double delta = x[i] - mean[i];
    mean[i] += r * delta;
    m2[i] += weight * delta * (x[i] - mean[i]);
  }
}

void gram_accumulate_scalar(const double* s, std::size_t m, std::size_t p, double sign, double* a) {
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t j = q; j < m; ++j) {
      const double v = sign * dot_scalar(s + q * p, s + j * p, p);
      a[q * m + j] += v;
      if (j != q) a[j * m + q] += v;
    }
  }
}

const KernelTable kScalar{Isa::kScalar,           dot_scalar,           axpy_scalar,
                          gaussian_terms_scalar, welford_update_scalar, gram_accumulate_scalar};

}  // namespace

namespace detail {
const KernelTable& scalar_table() noexcept { return kScalar; }
}  // namespace detail

}  // namespace goowe::simd
