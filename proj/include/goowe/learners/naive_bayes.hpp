// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/core/types.hpp"

namespace goowe {

/// Precomputed attribute positions shared by every model built on one schema.
struct AttributeLayout {
  explicit AttributeLayout(const StreamSchema& schema);

  std::size_t classes;
  std::size_t attributes;
  std::vector<std::size_t> numeric;            // schema positions
  std::vector<std::size_t> nominal;            // schema positions
  std::vector<std::uint32_t> cardinality;      // per nominal ordinal
  std::vector<std::size_t> value_offset;       // per nominal ordinal, into a flat value table
  std::size_t nominal_values = 0;              // sum of cardinalities
  bool all_numeric = false;
};

using LayoutPtr = std::shared_ptr<const AttributeLayout>;

/// Incremental Naive Bayes sufficient statistics.
///
/// Numeric attributes: per-class weighted Welford mean/M2 with min/max.
/// Unbiased variance, floored at kVarianceFloor. Nominal attributes: per-class
/// category counts with add-one smoothing.
///
/// Memory model (bytes), used by memory_bytes():
///   kBaseBytes + 8 p                                   always
///   + kClassStatsBytes + 48 q + 16 V                   per class seen so far
/// with q numeric attributes and V nominal values in total.
class NaiveBayesModel {
 public:
  static constexpr double kVarianceFloor = 1e-9;
  static constexpr std::size_t kBaseBytes = 48;
  static constexpr std::size_t kClassStatsBytes = 32;

  explicit NaiveBayesModel(LayoutPtr layout);

  void train(std::span<const double> x, ClassIndex label, double weight = 1.0);

  /// Posterior-proportional scores: exp(log joint - max log joint). Classes
  /// never seen score 0; an empty model returns all zeros.
  void score(std::span<const double> x, std::span<double> out) const;

  std::span<const double> class_counts() const noexcept { return class_counts_; }
  double total_weight() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0.0; }
  std::size_t class_count() const noexcept { return layout_->classes; }
  const AttributeLayout& layout() const noexcept { return *layout_; }

  struct GaussianSummary {
    double weight = 0.0;
    double mean = 0.0;
    double variance = kVarianceFloor;
    double min = 0.0;
    double max = 0.0;
  };
  /// Summary for class `c` and numeric ordinal `ord` (weight 0 when unseen).
  GaussianSummary numeric_summary(ClassIndex c, std::size_t ord) const;

  /// Raw (unsmoothed) count of `value` for class `c`, nominal ordinal `ord`.
  double nominal_count(ClassIndex c, std::size_t ord, std::uint32_t value) const;

  std::size_t memory_bytes() const noexcept;

 private:
  struct ClassStats {
    std::vector<double> mean, m2, inv_var, log_var, min, max;
    std::vector<double> counts, log_num;  // nominal, flat over values
    double log_den = 0.0;                 // sum over nominal attributes of log(n_c + card)
  };
  ClassStats& stats_for(ClassIndex c);

  LayoutPtr layout_;
  std::vector<double> class_counts_;
  double total_ = 0.0;
  std::vector<std::unique_ptr<ClassStats>> stats_;
  std::size_t classes_with_stats_ = 0;
};

/// Standalone Naive Bayes base learner.
class NaiveBayesClassifier final : public IncrementalClassifier {
 public:
  explicit NaiveBayesClassifier(const StreamSchema& schema);
  explicit NaiveBayesClassifier(LayoutPtr layout);

  void train_on(const Instance& inst) override;
  void score(std::span<const double> x, std::span<double> out) const override;
  std::size_t memory_estimate() const override { return model_.memory_bytes(); }
  void prune(std::size_t) override {}
  std::size_t class_count() const noexcept override { return model_.class_count(); }
  using IncrementalClassifier::score;

  const NaiveBayesModel& model() const noexcept { return model_; }

 private:
  NaiveBayesModel model_;
};

}  // namespace goowe
