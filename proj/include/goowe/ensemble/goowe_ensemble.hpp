// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/core/window.hpp"
#include "goowe/ensemble/component.hpp"
#include "goowe/ensemble/weight_system.hpp"
#include "goowe/ensemble/windowed_system.hpp"
#include "goowe/learners/factory.hpp"

namespace goowe {

struct GooweConfig {
  std::size_t max_components = 10;            // m
  std::size_t chunk_size = 500;               // h
  std::size_t window_size = 500;              // n
  std::size_t memory_limit = 32u << 20;       // L, bytes
  SolverOptions solver;
};

struct EnsembleCounters {
  std::size_t chunks = 0;
  std::size_t removals = 0;
  std::size_t prune_events = 0;
  std::size_t fallbacks = 0;  // non-finite solves replaced by uniform weights
};

/// Geometrically optimum online-weighted ensemble.
///
/// Every prediction solves A w = d over the latest n labeled instances and
/// combines the components' normalized scores with w. Every h instances a new
/// component is trained on the closed chunk; when the ensemble is full, the
/// component with the smallest |w'_j| on the chunk system is dropped first.
class GooweEnsemble final : public StreamClassifier {
 public:
  /// Fixed bookkeeping charged on top of the components' estimates.
  static constexpr std::size_t kBaseBytes = 256;

  GooweEnsemble(const StreamSchema& schema, GooweConfig config, LearnerFactory factory);

  ScoreVector predict(std::span<const double> x) override;
  void learn(const Instance& inst) override;
  std::size_t memory_bytes() const override;
  std::string_view name() const override { return "goowe"; }

  /// Test, then train.
  ScoreVector process_instance(const Instance& inst);

  std::size_t component_count() const noexcept { return components_.size(); }
  std::vector<ComponentId> component_ids() const;
  const IncrementalClassifier& component(std::size_t j) const { return *components_.at(j).model; }
  std::span<const double> last_weights() const noexcept { return last_weights_; }
  const WindowedWeightSystem& windowed() const noexcept { return windowed_; }
  const GooweConfig& config() const noexcept { return config_; }
  const EnsembleCounters& counters() const noexcept { return counters_; }
  const std::vector<ComponentId>& removed() const noexcept { return removed_; }

  /// Weight system over `chunk` from the current components' scores.
  WeightSystem build_chunk_system(std::span<const Instance> chunk) const;

  /// Index of the smallest |w_j|; ties go to the lowest index.
  static std::size_t removal_index(std::span<const double> w);

  /// Appends an externally built component (not counted as a chunk).
  ComponentId add_component(std::unique_ptr<IncrementalClassifier> model);

 private:
  void train_on_chunk(const std::vector<Instance>& chunk);
  void prune_all();
  void publish_components();

  StreamSchema schema_;
  GooweConfig config_;
  LearnerFactory factory_;
  std::size_t classes_;
  std::vector<Component> components_;
  WindowedWeightSystem windowed_;
  DataChunk chunk_;
  ComponentId next_id_ = 0;
  std::vector<double> last_weights_;
  std::vector<double> pending_x_;
  std::vector<double> pending_block_;
  bool has_pending_ = false;
  EnsembleCounters counters_;
  std::vector<ComponentId> removed_;
};

}  // namespace goowe
