// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/learners/naive_bayes.hpp"

namespace goowe {

enum class LeafPrediction { kMajorityClass, kNaiveBayes, kNaiveBayesAdaptive };

struct HoeffdingTreeParams {
  double grace_period = 100.0;    // n_min
  double split_confidence = 0.01;  // delta
  double tie_threshold = 0.05;     // tau
  double min_branch_fraction = 0.01;
  std::size_t numeric_split_points = 10;
  std::size_t max_depth = 64;
  LeafPrediction leaf_prediction = LeafPrediction::kNaiveBayesAdaptive;
};

/// Hoeffding bound sqrt(R^2 ln(1/delta) / (2 n)).
double hoeffding_bound(double range, double confidence, double n);

/// Entropy-based information gain of splitting `pre` into `post` branches.
/// Returns -infinity when fewer than two branches hold `min_branch_fraction`
/// of the total weight.
double information_gain(std::span<const double> pre, std::span<const std::vector<double>> post,
                        double min_branch_fraction);

/// Incremental decision tree with Naive Bayes leaves.
///
/// Numeric attributes split in two at one of `numeric_split_points` thresholds
/// evenly spaced over the leaf's observed range, with branch class weights
/// estimated from per-class Gaussians. Nominal attributes split multiway and
/// are used at most once per path.
///
/// Memory model (bytes), maintained incrementally and reported by
/// memory_estimate():
///   kTreeBytes                                        once
///   + kInternalBytes + 8 * branches                   per internal node
///   + kLeafBytes + 8 p                                per leaf
///   + NaiveBayesModel::memory_bytes()                 per active leaf
/// An untrained tree therefore costs kTreeBytes + kLeafBytes + 8p +
/// NaiveBayesModel::kBaseBytes + 8p.
class HoeffdingTree final : public IncrementalClassifier {
 public:
  static constexpr std::size_t kTreeBytes = 64;
  static constexpr std::size_t kInternalBytes = 64;
  static constexpr std::size_t kLeafBytes = 96;

  HoeffdingTree(const StreamSchema& schema, HoeffdingTreeParams params = {});
  HoeffdingTree(LayoutPtr layout, HoeffdingTreeParams params = {});

  void train_on(const Instance& inst) override;
  void score(std::span<const double> x, std::span<double> out) const override;
  std::size_t memory_estimate() const override { return bytes_; }
  void prune(std::size_t target_bytes) override;
  std::size_t class_count() const noexcept override { return layout_->classes; }
  using IncrementalClassifier::score;

  /// Memory recomputed by walking the tree; equals memory_estimate().
  std::size_t recount_memory() const;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept;
  std::size_t active_leaf_count() const noexcept;
  std::size_t depth() const;
  double trained_weight() const noexcept { return trained_; }
  std::size_t split_attempts() const noexcept { return split_attempts_; }
  const HoeffdingTreeParams& params() const noexcept { return params_; }

  struct LeafView {
    std::size_t node;
    double seen;
    bool active;
    std::uint64_t created;
    std::span<const double> class_counts;
  };
  std::vector<LeafView> leaves() const;

  /// Node index of the leaf `x` routes to.
  std::size_t route(std::span<const double> x) const;

  /// Split attribute of the root, if it has split.
  std::optional<std::size_t> root_split_attribute() const;

  /// Attributes tested on the path to `leaf` (root first).
  std::vector<std::size_t> path_attributes(std::size_t leaf) const;

  /// Structural fingerprint (shape, split tests, leaf counts).
  std::uint64_t fingerprint() const;

 private:
  struct Leaf {
    std::vector<double> class_counts;
    std::unique_ptr<NaiveBayesModel> nb;  // null once deactivated
    double weight_at_last_attempt = 0.0;
    double mc_correct = 0.0;
    double nb_correct = 0.0;
    std::uint64_t created = 0;
    std::size_t depth = 0;
    std::vector<std::uint8_t> used_nominal;  // per nominal ordinal
    double seen() const;
  };
  struct Node {
    std::unique_ptr<Leaf> leaf;  // null for internal nodes
    std::size_t parent = SIZE_MAX;
    std::size_t attribute = 0;
    bool nominal_split = false;
    double threshold = 0.0;
    std::vector<std::size_t> children;
  };
  struct SplitCandidate {
    double merit;
    std::size_t attribute;
    bool nominal;
    double threshold;
    std::vector<std::vector<double>> branches;  // per-branch class weights
  };

  std::size_t leaf_bytes(const Leaf& leaf) const;
  std::unique_ptr<Leaf> make_leaf(std::size_t depth, std::vector<std::uint8_t> used_nominal);
  void attempt_split(std::size_t node_index);
  std::vector<SplitCandidate> candidates(const Leaf& leaf) const;
  void leaf_scores(const Leaf& leaf, std::span<const double> x, std::span<double> out) const;

  LayoutPtr layout_;
  HoeffdingTreeParams params_;
  std::vector<Node> nodes_;
  std::size_t bytes_ = 0;
  double trained_ = 0.0;
  std::uint64_t next_created_ = 0;
  std::size_t split_attempts_ = 0;
};

}  // namespace goowe
