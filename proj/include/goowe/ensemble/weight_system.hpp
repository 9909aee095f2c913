// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "goowe/core/types.hpp"

namespace goowe {

class NoComponentsError : public Error {
 public:
  using Error::Error;
};

/// Contribution of one instance to the weight system.
struct InstanceContribution {
  std::vector<double> a;  // m x m, row-major: sum_k S^k_q S^k_j
  std::vector<double> d;  // m: sum_k O^k S^k_q
};

/// Per-instance outer-product terms for one set of normalized component scores.
InstanceContribution accumulate_instance(std::span<const ScoreVector> scores, const IdealPoint& ideal);

struct WeightSolution {
  std::vector<double> w;
  std::size_t rank = 0;
  bool fallback = false;  // non-finite solve replaced by uniform 1/m
};

/// Coefficient matrix A (m x m, symmetric PSD) and remainder vector d; the
/// least-squares solution of A w = d gives the component weights.
class WeightSystem {
 public:
  explicit WeightSystem(std::size_t components = 0) { reset(components); }

  void reset(std::size_t components);
  std::size_t dimension() const noexcept { return m_; }

  /// Adds `sign` times one instance's terms. `block` holds the m normalized
  /// score vectors back to back (m x p, row-major).
  void add(std::span<const double> block, std::size_t p, ClassIndex label, double sign = 1.0);
  void add(std::span<const ScoreVector> scores, const IdealPoint& ideal, double sign = 1.0);

  double a(std::size_t q, std::size_t j) const { return a_[q * m_ + j]; }
  double d(std::size_t q) const { return d_[q]; }
  std::span<const double> a() const noexcept { return a_; }
  std::span<const double> d() const noexcept { return d_; }

  /// Number of instances currently summed (adds minus subtracts).
  long long instances() const noexcept { return instances_; }

  /// Direct construction, e.g. from displayed values.
  static WeightSystem from_values(std::span<const double> a_row_major, std::span<const double> d);

  /// Gradient of the squared-error objective at w: 2 (A w - d).
  std::vector<double> gradient(std::span<const double> w) const;

 private:
  std::size_t m_ = 0;
  std::vector<double> a_;
  std::vector<double> d_;
  long long instances_ = 0;
};

struct SolverOptions {
  double rank_tolerance = 1e-10;
};

/// Minimum-norm least-squares solution of A w = d. Throws NoComponentsError for
/// m = 0; returns uniform weights with `fallback` set if the solve is non-finite.
WeightSolution solve_weights(const WeightSystem& system, const SolverOptions& options = {});

/// Weighted vote: raw = sum_j w_j s_j, then per-vector min-max rescale and
/// sum-normalization. A constant raw vector maps to uniform.
ScoreVector aggregate_votes(std::span<const ScoreVector> scores, std::span<const double> weights);
ScoreVector aggregate_votes(std::span<const double> block, std::size_t p, std::span<const double> weights);

}  // namespace goowe
