// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2 -mfma; only reached after a runtime CPU check.
#include "goowe/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace goowe::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double gaussian_terms_avx2(const double* x, const double* mean, const double* inv_var,
                           const double* log_var, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mean + i));
    const __m256d t = _mm256_mul_pd(d, d);
    acc = _mm256_fmadd_pd(t, _mm256_loadu_pd(inv_var + i), acc);
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(log_var + i));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = x[i] - mean[i];
    s += d * d * inv_var[i] + log_var[i];
  }
  return s;
}

void welford_update_avx2(const double* x, double* mean, double* m2, double weight,
                         double weight_after, std::size_t n) {
  const double r = weight / weight_after;
  const __m256d vr = _mm256_set1_pd(r);
  const __m256d vw = _mm256_set1_pd(weight);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vm = _mm256_loadu_pd(mean + i);
    const __m256d delta = _mm256_sub_pd(vx, vm);
    const __m256d nm = _mm256_fmadd_pd(vr, delta, vm);
    _mm256_storeu_pd(mean + i, nm);
    const __m256d prod = _mm256_mul_pd(_mm256_mul_pd(vw, delta), _mm256_sub_pd(vx, nm));
    _mm256_storeu_pd(m2 + i, _mm256_add_pd(_mm256_loadu_pd(m2 + i), prod));
  }
  for (; i < n; ++i) {
    const double delta = x[i] - mean[i];
    mean[i] += r * delta;
    m2[i] += weight * delta * (x[i] - mean[i]);
  }
}

void gram_accumulate_avx2(const double* s, std::size_t m, std::size_t p, double sign, double* a) {
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t j = q; j < m; ++j) {
      const double v = sign * dot_avx2(s + q * p, s + j * p, p);
      a[q * m + j] += v;
      if (j != q) a[j * m + q] += v;
    }
  }
}

const KernelTable kAvx2{Isa::kAvx2,          dot_avx2,           axpy_avx2,
                        gaussian_terms_avx2, welford_update_avx2, gram_accumulate_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table() noexcept {
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
  return nullptr;
}
}  // namespace detail

}  // namespace goowe::simd

#else

namespace goowe::simd::detail {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace goowe::simd::detail

#endif
