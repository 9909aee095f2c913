// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "goowe/core/rng.hpp"
#include "goowe/simd/kernels.hpp"

namespace goowe::simd {
namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo = -2.0, double hi = 2.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, MatchesScalarReference) {
  const KernelTable* table = kernels_for(GetParam());
  if (table == nullptr) GTEST_SKIP() << isa_name(GetParam()) << " not available on this machine";
  const KernelTable& ref = detail::scalar_table();
  Rng rng(11);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 100u}) {
    const auto a = random_vec(rng, n), b = random_vec(rng, n);
    EXPECT_LE(rel_err(table->dot(a.data(), b.data(), n), ref.dot(a.data(), b.data(), n)), 1e-13) << n;

    auto y1 = random_vec(rng, n), y2 = y1;
    table->axpy(0.75, a.data(), y1.data(), n);
    ref.axpy(0.75, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-14);

    const auto inv = random_vec(rng, n, 0.1, 5.0), lv = random_vec(rng, n);
    EXPECT_LE(rel_err(table->gaussian_terms(a.data(), b.data(), inv.data(), lv.data(), n),
                      ref.gaussian_terms(a.data(), b.data(), inv.data(), lv.data(), n)),
              1e-13);

    auto mean1 = random_vec(rng, n), m21 = random_vec(rng, n, 0.0, 1.0);
    auto mean2 = mean1, m22 = m21;
    table->welford_update(a.data(), mean1.data(), m21.data(), 0.5, 3.5, n);
    ref.welford_update(a.data(), mean2.data(), m22.data(), 0.5, 3.5, n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(mean1[i], mean2[i], 1e-14);
      EXPECT_NEAR(m21[i], m22[i], 1e-13);
    }
  }
  for (std::size_t m : {1u, 2u, 3u, 5u, 10u})
    for (std::size_t p : {2u, 3u, 4u, 10u}) {
      const auto s = random_vec(rng, m * p, 0.0, 1.0);
      auto a1 = random_vec(rng, m * m), a2 = a1;
      table->gram_accumulate(s.data(), m, p, -1.0, a1.data());
      ref.gram_accumulate(s.data(), m, p, -1.0, a2.data());
      for (std::size_t i = 0; i < m * m; ++i) EXPECT_NEAR(a1[i], a2[i], 1e-13);
    }
}

INSTANTIATE_TEST_SUITE_P(AllIsas, KernelEquivalence, ::testing::Values(Isa::kScalar, Isa::kAvx2, Isa::kNeon),
                         [](const auto& info) { return std::string(isa_name(info.param)); });

TEST(ScalarKernels, HandComputedValues) {
  const KernelTable& k = detail::scalar_table();
  const double a[] = {1, 2, 3}, b[] = {4, -5, 6};
  EXPECT_EQ(k.dot(a, b, 3), 12.0);
  const double mean[] = {0, 0, 0}, inv[] = {1, 0.5, 0.25}, lv[] = {0, 1, 2};
  EXPECT_EQ(k.gaussian_terms(a, mean, inv, lv, 3), 1 + 2 + 2.25 + 3);
  // s = [[1,0],[0.5,0.5]] -> s s^T = [[1,0.5],[0.5,0.5]]
  const double s[] = {1, 0, 0.5, 0.5};
  double g[4] = {0, 0, 0, 0};
  k.gram_accumulate(s, 2, 2, 1.0, g);
  EXPECT_EQ(g[0], 1.0);
  EXPECT_EQ(g[1], 0.5);
  EXPECT_EQ(g[2], 0.5);
  EXPECT_EQ(g[3], 0.5);
  // Welford: mean of {2, 4} with unit weights.
  double mu[] = {0}, m2[] = {0};
  const double x1[] = {2}, x2[] = {4};
  k.welford_update(x1, mu, m2, 1.0, 1.0, 1);
  k.welford_update(x2, mu, m2, 1.0, 2.0, 1);
  EXPECT_EQ(mu[0], 3.0);
  EXPECT_EQ(m2[0], 2.0);
}

TEST(Dispatch, ScalarAlwaysAvailable) {
  const auto isas = available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::kScalar);
  EXPECT_NE(kernels_for(kernels().isa), nullptr);
}

}  // namespace
}  // namespace goowe::simd
