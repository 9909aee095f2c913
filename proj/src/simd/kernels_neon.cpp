// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace goowe::simd {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double gaussian_terms_neon(const double* x, const double* mean, const double* inv_var,
                           const double* log_var, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + i), vld1q_f64(mean + i));
    acc = vfmaq_f64(acc, vmulq_f64(d, d), vld1q_f64(inv_var + i));
    acc = vaddq_f64(acc, vld1q_f64(log_var + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = x[i] - mean[i];
    s += d * d * inv_var[i] + log_var[i];
  }
  return s;
}

void welford_update_neon(const double* x, double* mean, double* m2, double weight,
                         double weight_after, std::size_t n) {
  const double r = weight / weight_after;
  const float64x2_t vr = vdupq_n_f64(r);
  const float64x2_t vw = vdupq_n_f64(weight);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vm = vld1q_f64(mean + i);
    const float64x2_t delta = vsubq_f64(vx, vm);
    const float64x2_t nm = vfmaq_f64(vm, vr, delta);
    vst1q_f64(mean + i, nm);
    vst1q_f64(m2 + i, vaddq_f64(vld1q_f64(m2 + i), vmulq_f64(vmulq_f64(vw, delta), vsubq_f64(vx, nm))));
  }
  for (; i < n; ++i) {
    const double delta = x[i] - mean[i];
    mean[i] += r * delta;
    m2[i] += weight * delta * (x[i] - mean[i]);
  }
}

void gram_accumulate_neon(const double* s, std::size_t m, std::size_t p, double sign, double* a) {
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t j = q; j < m; ++j) {
      const double v = sign * dot_neon(s + q * p, s + j * p, p);
      a[q * m + j] += v;
      if (j != q) a[j * m + q] += v;
    }
  }
}

const KernelTable kNeon{Isa::kNeon,          dot_neon,           axpy_neon,
                        gaussian_terms_neon, welford_update_neon, gram_accumulate_neon};

}  // namespace

namespace detail {
const KernelTable* neon_table() noexcept { return &kNeon; }
}  // namespace detail

}  // namespace goowe::simd

#else

namespace goowe::simd::detail {
const KernelTable* neon_table() noexcept { return nullptr; }
}  // namespace goowe::simd::detail

#endif
