// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/ensemble/weight_system.hpp"

#include <algorithm>
#include <cmath>

#include "goowe/ensemble/lsq_solver.hpp"
#include "goowe/simd/kernels.hpp"

namespace goowe {

namespace {

std::vector<double> flatten(std::span<const ScoreVector> scores, std::size_t p) {
  std::vector<double> block;
  block.reserve(scores.size() * p);
  for (const auto& s : scores) {
    if (s.size() != p) throw ConsistencyError("score vector length differs from class count");
    block.insert(block.end(), s.values().begin(), s.values().end());
  }
  return block;
}

}  // namespace

InstanceContribution accumulate_instance(std::span<const ScoreVector> scores, const IdealPoint& ideal) {
  const std::size_t m = scores.size();
  const std::size_t p = ideal.size();
  const auto block = flatten(scores, p);
  InstanceContribution out{std::vector<double>(m * m, 0.0), std::vector<double>(m, 0.0)};
  simd::kernels().gram_accumulate(block.data(), m, p, 1.0, out.a.data());
  for (std::size_t q = 0; q < m; ++q) out.d[q] = block[q * p + ideal.label()];
  return out;
}

void WeightSystem::reset(std::size_t components) {
  m_ = components;
  a_.assign(m_ * m_, 0.0);
  d_.assign(m_, 0.0);
  instances_ = 0;
}

void WeightSystem::add(std::span<const double> block, std::size_t p, ClassIndex label, double sign) {
  if (block.size() != m_ * p) throw ConsistencyError("score block does not match system dimension");
  if (label >= p) throw ConsistencyError("label outside score vector");
  simd::kernels().gram_accumulate(block.data(), m_, p, sign, a_.data());
  for (std::size_t q = 0; q < m_; ++q) d_[q] += sign * block[q * p + label];
  instances_ += sign > 0 ? 1 : -1;
}

void WeightSystem::add(std::span<const ScoreVector> scores, const IdealPoint& ideal, double sign) {
  if (scores.size() != m_) throw ConsistencyError("component count does not match system dimension");
  add(flatten(scores, ideal.size()), ideal.size(), ideal.label(), sign);
}

WeightSystem WeightSystem::from_values(std::span<const double> a_row_major, std::span<const double> d) {
  WeightSystem s(d.size());
  if (a_row_major.size() != d.size() * d.size()) throw ConsistencyError("A must be m x m");
  std::copy(a_row_major.begin(), a_row_major.end(), s.a_.begin());
  std::copy(d.begin(), d.end(), s.d_.begin());
  return s;
}

std::vector<double> WeightSystem::gradient(std::span<const double> w) const {
  if (w.size() != m_) throw ConsistencyError("weight vector length differs from system dimension");
  std::vector<double> g(m_);
  const auto& k = simd::kernels();
  for (std::size_t q = 0; q < m_; ++q) g[q] = 2.0 * (k.dot(a_.data() + q * m_, w.data(), m_) - d_[q]);
  return g;
}

WeightSolution solve_weights(const WeightSystem& system, const SolverOptions& options) {
  const std::size_t m = system.dimension();
  if (m == 0) throw NoComponentsError("cannot solve a weight system without components");
  const auto a = DenseMatrix::from_row_major(system.a(), m, m);
  auto ls = solve_least_squares(a, system.d(), options.rank_tolerance);
  WeightSolution out{std::move(ls.x), ls.rank, false};
  const bool finite = std::all_of(out.w.begin(), out.w.end(), [](double v) { return std::isfinite(v); });
  if (!finite) {
    out.w.assign(m, 1.0 / static_cast<double>(m));
    out.fallback = true;
  }
  return out;
}

ScoreVector aggregate_votes(std::span<const double> block, std::size_t p, std::span<const double> weights) {
  const std::size_t m = weights.size();
  if (block.size() != m * p) throw ConsistencyError("score block does not match weight count");
  std::vector<double> raw(p, 0.0);
  const auto& k = simd::kernels();
  for (std::size_t j = 0; j < m; ++j) k.axpy(weights[j], block.data() + j * p, raw.data(), p);
  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const double min = *lo;
  const double range = *hi - min;
  if (!(range > 0.0) || !std::isfinite(range)) return ScoreVector::uniform(p);
  for (double& v : raw) v = (v - min) / range;
  return normalize_scores(raw, p);
}

ScoreVector aggregate_votes(std::span<const ScoreVector> scores, std::span<const double> weights) {
  if (scores.size() != weights.size()) throw ConsistencyError("score and weight counts differ");
  if (scores.empty()) throw ConsistencyError("no scores to aggregate");
  const std::size_t p = scores.front().size();
  return aggregate_votes(flatten(scores, p), p, weights);
}

}  // namespace goowe
