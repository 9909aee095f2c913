// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/baselines/scaffold.hpp"

#include <algorithm>
#include <cmath>

#include "goowe/core/hash.hpp"

namespace goowe {

ScaffoldConfig ScaffoldConfig::base1(RuleSpec vote) {
  ScaffoldConfig c;
  c.vote = vote;
  c.replacement = RuleSpec{RuleKind::kAue2};
  c.label = "base1:" + rule_name(vote);
  return c;
}

ScaffoldConfig ScaffoldConfig::base2(RuleSpec replacement) {
  ScaffoldConfig c;
  c.vote = RuleSpec{RuleKind::kMajority};
  c.replacement = replacement;
  c.label = "base2:" + rule_name(replacement);
  return c;
}

BlockEnsembleScaffold::BlockEnsembleScaffold(const StreamSchema& schema, ScaffoldConfig config,
                                             LearnerFactory factory)
    : schema_(schema),
      config_(std::move(config)),
      factory_(std::move(factory)),
      classes_(schema.class_count()),
      chunk_(config_.chunk_size) {
  if (config_.max_components == 0) throw SchemaError("ensemble size must be positive");
  if (config_.chunk_size == 0) throw SchemaError("chunk size must be positive");
  if (config_.memory_limit == 0) throw SchemaError("memory limit must be positive");
  if (!factory_) throw SchemaError("no base learner factory");
  if (config_.vote.kind == RuleKind::kGoowe && config_.goowe_source == GooweSolveSource::kWindow)
    windowed_.emplace(config_.window_size, std::max(config_.window_size, config_.chunk_size), classes_);
}

ScoreVector BlockEnsembleScaffold::predict(std::span<const double> x) {
  schema_.validate(x);
  pending_x_.assign(x.begin(), x.end());
  has_pending_ = true;
  if (components_.empty()) {
    pending_block_.clear();
    last_weights_.clear();
    return ScoreVector::uniform(classes_);
  }
  pending_block_ = score_block(components_, x, classes_);
  switch (config_.vote.kind) {
    case RuleKind::kMajority:
      last_weights_ = mv_weights(components_.size());
      break;
    case RuleKind::kDwm:
      last_weights_ = dwm_weights_;
      break;
    case RuleKind::kAwe:
    case RuleKind::kAue2:
      last_weights_ = vote_weights_;
      break;
    case RuleKind::kGoowe:
      if (windowed_) {
        const WeightSystem& system = windowed_->system([this](ComponentId id, std::span<const double> xs) {
          for (const auto& c : components_)
            if (c.id == id) return c.model->normalized_score(xs);
          throw ConsistencyError("unknown component id");
        });
        if (system.instances() == 0) {
          last_weights_ = mv_weights(components_.size());
        } else {
          WeightSolution sol = solve_weights(system, config_.solver);
          if (sol.fallback) ++counters_.fallbacks;
          last_weights_ = std::move(sol.w);
        }
      } else {
        last_weights_ = vote_weights_;
      }
      break;
  }
  return aggregate_votes(pending_block_, classes_, last_weights_);
}

void BlockEnsembleScaffold::learn(const Instance& inst) {
  schema_.validate(inst.x);
  if (inst.label >= classes_) throw SchemaError("label out of range");
  if (!components_.empty()) {
    if (!has_pending_ || pending_x_ != inst.x) pending_block_ = score_block(components_, inst.x, classes_);
    if (uses(RuleKind::kDwm)) {
      std::vector<std::uint8_t> correct(components_.size());
      for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto row = std::span<const double>(pending_block_).subspan(j * classes_, classes_);
        correct[j] = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin()) ==
                     inst.label;
      }
      const RuleSpec& r = config_.vote.kind == RuleKind::kDwm ? config_.vote : config_.replacement;
      dwm_weights_ = dwm_update(dwm_weights_, correct, r.beta, r.theta).weights;
    }
    if (windowed_) windowed_->push(inst, cache_from_block(components_, pending_block_, classes_));
  } else if (windowed_) {
    windowed_->push(inst, CachedScores{});
  }
  has_pending_ = false;
  if (auto full = chunk_.push(inst)) train_on_chunk(*full);
  if (memory_bytes() >= config_.memory_limit) {
    ++counters_.prune_events;
    const std::size_t share = config_.memory_limit / config_.max_components;
    for (auto& c : components_) c.model->prune(share);
  }
}

WeightSystem BlockEnsembleScaffold::chunk_system(std::span<const Instance> chunk) const {
  WeightSystem system(components_.size());
  for (const Instance& inst : chunk)
    system.add(score_block(components_, inst.x, classes_), classes_, inst.label, 1.0);
  return system;
}

std::vector<double> BlockEnsembleScaffold::chunk_rule_weights(const RuleSpec& rule,
                                                              std::span<const Instance> chunk,
                                                              double* candidate_weight) const {
  switch (rule.kind) {
    case RuleKind::kAwe: {
      if (candidate_weight) *candidate_weight = mse_r(chunk, classes_);
      return components_.empty() ? std::vector<double>{} : awe_weights(components_, chunk);
    }
    case RuleKind::kAue2: {
      if (candidate_weight) *candidate_weight = 1.0 / (mse_r(chunk, classes_) + config_.aue2_epsilon);
      return components_.empty() ? std::vector<double>{}
                                 : aue2_weights(components_, chunk, config_.aue2_epsilon);
    }
    case RuleKind::kGoowe: {
      if (components_.empty()) return {};
      WeightSolution sol = solve_weights(chunk_system(chunk), config_.solver);
      return sol.w;
    }
    case RuleKind::kDwm:
      if (candidate_weight) *candidate_weight = 1.0;
      return dwm_weights_;
    case RuleKind::kMajority:
      if (candidate_weight) *candidate_weight = 1.0;
      return std::vector<double>(components_.size(), 1.0);
  }
  return {};
}

std::vector<double> BlockEnsembleScaffold::replacement_weights(std::span<const Instance> chunk) const {
  return chunk_rule_weights(config_.replacement, chunk, nullptr);
}

void BlockEnsembleScaffold::train_on_chunk(const std::vector<Instance>& chunk) {
  ++counters_.chunks;
  Fnv1a h;
  h.add(fingerprint_);
  auto candidate = factory_();
  for (const Instance& inst : chunk) candidate->train_on(inst);

  double candidate_vote = 1.0;
  std::vector<double> vote;
  const bool chunk_vote = config_.vote.kind == RuleKind::kAwe || config_.vote.kind == RuleKind::kAue2;
  if (chunk_vote) vote = chunk_rule_weights(config_.vote, chunk, &candidate_vote);

  if (components_.size() >= config_.max_components) {
    std::vector<double> w = replacement_weights(chunk);
    if (config_.replacement.kind == RuleKind::kGoowe)
      for (double& v : w) v = std::abs(v);
    const std::size_t drop = static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin());
    h.add(static_cast<std::uint64_t>(components_[drop].id));
    components_.erase(components_.begin() + static_cast<std::ptrdiff_t>(drop));
    if (!dwm_weights_.empty()) dwm_weights_.erase(dwm_weights_.begin() + static_cast<std::ptrdiff_t>(drop));
    if (chunk_vote) vote.erase(vote.begin() + static_cast<std::ptrdiff_t>(drop));
    ++counters_.removals;
  }
  for (auto& c : components_)
    for (const Instance& inst : chunk) c.model->train_on(inst);

  const ComponentId id = next_id_++;
  h.add(static_cast<std::uint64_t>(id));
  components_.push_back({id, std::move(candidate)});
  if (uses(RuleKind::kDwm)) dwm_weights_.push_back(1.0);
  if (chunk_vote) {
    vote.push_back(candidate_vote);
    vote_weights_ = std::move(vote);
  }
  for (const auto& c : components_) h.add(static_cast<std::uint64_t>(c.model->memory_estimate()));
  fingerprint_ = h.value();

  if (config_.vote.kind == RuleKind::kGoowe) {
    if (windowed_) {
      std::vector<ComponentId> ids;
      for (const auto& c : components_) ids.push_back(c.id);
      windowed_->set_components(ids);
    } else {
      WeightSolution sol = solve_weights(chunk_system(chunk), config_.solver);
      if (sol.fallback) ++counters_.fallbacks;
      vote_weights_ = std::move(sol.w);
    }
  }
}

std::size_t BlockEnsembleScaffold::memory_bytes() const {
  std::size_t total = GooweEnsemble::kBaseBytes;
  for (const auto& c : components_) total += c.model->memory_estimate();
  return total;
}

}  // namespace goowe
