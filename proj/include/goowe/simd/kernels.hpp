// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Data-parallel inner loops used by the weight engine and the Naive Bayes
// leaves. Every kernel has a scalar reference; vector variants are selected
// once at runtime from the CPU's capabilities and are equivalence-tested
// against the reference (tests/unit/simd_kernels_test.cpp).
//
// Vector variants reorder floating-point reductions, so results agree with
// the scalar reference to rounding, not bit-for-bit. A given build on a given
// machine is still fully deterministic.
//
// Set GOOWE_SIMD=scalar|avx2|neon to force a variant (unsupported requests
// fall back to scalar).

#include <cstddef>
#include <string_view>
#include <vector>

namespace goowe::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // y[i] += alpha*x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // sum_i (x[i]-mean[i])^2 * inv_var[i] + log_var[i]
  double (*gaussian_terms)(const double* x, const double* mean, const double* inv_var,
                           const double* log_var, std::size_t n);

  // Weighted Welford step for one observation vector. `weight_after` is the
  // accumulated weight including this observation.
  void (*welford_update)(const double* x, double* mean, double* m2, double weight,
                         double weight_after, std::size_t n);

  // a (m x m, row-major) += sign * s * s^T, with s an m x p row-major block of
  // score vectors.
  void (*gram_accumulate)(const double* s, std::size_t m, std::size_t p, double sign, double* a);
};

/// Table for the best ISA this CPU supports (or the GOOWE_SIMD override).
const KernelTable& kernels() noexcept;

/// Table for a specific ISA; nullptr when not compiled in or not supported here.
const KernelTable* kernels_for(Isa isa) noexcept;

/// ISAs usable in this process, scalar first.
std::vector<Isa> available_isas();

namespace detail {
const KernelTable& scalar_table() noexcept;
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace goowe::simd
