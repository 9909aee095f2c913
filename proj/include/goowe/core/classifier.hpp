// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "goowe/core/types.hpp"

namespace goowe {

/// Base learner contract. `score` is const: testing never trains.
/// Training is deterministic for a fixed input order.
class IncrementalClassifier {
 public:
  virtual ~IncrementalClassifier() = default;

  virtual void train_on(const Instance& inst) = 0;

  /// Pre-normalization scores, one per class. Writes into `out` (size p).
  virtual void score(std::span<const double> x, std::span<double> out) const = 0;

  /// Deterministic model-size estimate in bytes.
  virtual std::size_t memory_estimate() const = 0;

  /// Best-effort shrink toward `target_bytes`.
  virtual void prune(std::size_t target_bytes) = 0;

  virtual std::size_t class_count() const noexcept = 0;

  std::vector<double> score(std::span<const double> x) const {
    std::vector<double> out(class_count());
    score(x, out);
    return out;
  }

  /// Scores normalized to sum to one.
  ScoreVector normalized_score(std::span<const double> x) const {
    std::vector<double> raw(class_count());
    score(x, raw);
    return normalize_scores(raw, raw.size());
  }
};

/// Ensemble-level contract used by the prequential evaluator. `predict` sees
/// features only; the label is revealed afterwards through `learn`.
class StreamClassifier {
 public:
  virtual ~StreamClassifier() = default;
  virtual ScoreVector predict(std::span<const double> x) = 0;
  virtual void learn(const Instance& inst) = 0;
  virtual std::size_t memory_bytes() const = 0;
  virtual std::string_view name() const = 0;
};

}  // namespace goowe
