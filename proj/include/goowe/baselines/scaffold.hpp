// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goowe/baselines/rules.hpp"
#include "goowe/core/classifier.hpp"
#include "goowe/ensemble/component.hpp"
#include "goowe/ensemble/goowe_ensemble.hpp"
#include "goowe/ensemble/windowed_system.hpp"

namespace goowe {

/// Which instances the goowe vote rule solves on.
enum class GooweSolveSource { kWindow, kChunk };

struct ScaffoldConfig {
  std::size_t max_components = 10;
  std::size_t chunk_size = 500;
  std::size_t window_size = 500;
  std::size_t memory_limit = 32u << 20;
  SolverOptions solver;
  double aue2_epsilon = kAue2Epsilon;
  RuleSpec vote{RuleKind::kMajority};
  RuleSpec replacement{RuleKind::kAue2};
  GooweSolveSource goowe_source = GooweSolveSource::kWindow;
  std::string label = "scaffold";

  /// Everything as in the AUE2-style block ensemble except the vote rule.
  static ScaffoldConfig base1(RuleSpec vote);
  /// Majority vote with the given add/drop rule.
  static ScaffoldConfig base2(RuleSpec replacement);
};

/// Chunk-based ensemble skeleton with one pluggable vote rule and one
/// pluggable replacement rule.
///
/// Per closed chunk: a candidate is trained on the chunk; replacement weights
/// of the current members are computed on the chunk; when full, the member
/// with the lowest replacement weight (lowest index on ties, |w| for goowe)
/// is dropped; survivors are trained on the chunk; the candidate joins.
/// The vote rule only decides how member scores are combined.
class BlockEnsembleScaffold final : public StreamClassifier {
 public:
  BlockEnsembleScaffold(const StreamSchema& schema, ScaffoldConfig config, LearnerFactory factory);

  ScoreVector predict(std::span<const double> x) override;
  void learn(const Instance& inst) override;
  std::size_t memory_bytes() const override;
  std::string_view name() const override { return config_.label; }

  std::size_t component_count() const noexcept { return components_.size(); }
  std::span<const double> last_weights() const noexcept { return last_weights_; }
  const ScaffoldConfig& config() const noexcept { return config_; }
  const EnsembleCounters& counters() const noexcept { return counters_; }

  /// Hash of every training decision and the members' sizes after each chunk.
  /// Equal across vote rules when the replacement rule is fixed.
  std::uint64_t training_fingerprint() const noexcept { return fingerprint_; }

  /// Replacement weights of the current members over `chunk` (goowe: chunk
  /// system solution; mv: all ones; dwm: current online weights).
  std::vector<double> replacement_weights(std::span<const Instance> chunk) const;

 private:
  void train_on_chunk(const std::vector<Instance>& chunk);
  std::vector<double> chunk_rule_weights(const RuleSpec& rule, std::span<const Instance> chunk,
                                         double* candidate_weight) const;
  WeightSystem chunk_system(std::span<const Instance> chunk) const;
  bool uses(RuleKind kind) const noexcept {
    return config_.vote.kind == kind || config_.replacement.kind == kind;
  }

  StreamSchema schema_;
  ScaffoldConfig config_;
  LearnerFactory factory_;
  std::size_t classes_;
  std::vector<Component> components_;
  std::optional<WindowedWeightSystem> windowed_;
  DataChunk chunk_;
  ComponentId next_id_ = 0;
  std::vector<double> vote_weights_;  // chunk-level or online rules
  std::vector<double> dwm_weights_;
  std::vector<double> last_weights_;
  std::vector<double> pending_x_;
  std::vector<double> pending_block_;
  bool has_pending_ = false;
  EnsembleCounters counters_;
  std::uint64_t fingerprint_ = 14695981039346656037ull;
};

}  // namespace goowe
