// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "goowe/core/window.hpp"
#include "goowe/ensemble/weight_system.hpp"

namespace goowe {

/// Sliding instance window with cached component scores and the weight system
/// summed over its latest `solve_size` instances.
///
/// Pushes and evictions update (A, d) incrementally. Component churn marks the
/// system stale; the next `system()` call scores windowed instances for any new
/// component (once, with the current model) and rebuilds (A, d) from the cache.
class WindowedWeightSystem {
 public:
  using Scorer = std::function<ScoreVector(ComponentId, std::span<const double>)>;

  /// `solve_size` = n, `capacity` = max(n, h).
  WindowedWeightSystem(std::size_t solve_size, std::size_t capacity, std::size_t classes);

  /// Declares the live component order. Removed ids are dropped from every slot.
  void set_components(std::span<const ComponentId> ids);
  std::span<const ComponentId> components() const noexcept { return ids_; }

  /// Adds a labeled instance with scores for every live component.
  void push(Instance inst, CachedScores scores);

  /// Current system; fills missing cache entries through `scorer` first.
  const WeightSystem& system(const Scorer& scorer);

  /// From-scratch sum over the cached scores (no incremental state).
  WeightSystem recompute() const;

  const InstanceWindow& window() const noexcept { return window_; }
  std::size_t solve_size() const noexcept { return solve_size_; }
  std::size_t solved_instances() const noexcept { return std::min(window_.size(), solve_size_); }
  bool stale() const noexcept { return stale_; }

 private:
  std::vector<double> block_for(const WindowSlot& slot) const;

  std::size_t solve_size_;
  std::size_t classes_;
  InstanceWindow window_;
  std::vector<ComponentId> ids_;
  WeightSystem system_;
  bool stale_ = false;
};

}  // namespace goowe
