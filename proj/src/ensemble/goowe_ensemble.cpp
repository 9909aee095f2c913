// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/ensemble/goowe_ensemble.hpp"

#include <algorithm>
#include <cmath>

namespace goowe {

GooweEnsemble::GooweEnsemble(const StreamSchema& schema, GooweConfig config, LearnerFactory factory)
    : schema_(schema),
      config_(config),
      factory_(std::move(factory)),
      classes_(schema.class_count()),
      windowed_(config.window_size, std::max(config.window_size, config.chunk_size), schema.class_count()),
      chunk_(config.chunk_size) {
  if (config_.max_components == 0) throw SchemaError("ensemble size must be positive");
  if (config_.chunk_size == 0) throw SchemaError("chunk size must be positive");
  if (config_.memory_limit == 0) throw SchemaError("memory limit must be positive");
  if (!factory_) throw SchemaError("no base learner factory");
}

std::vector<ComponentId> GooweEnsemble::component_ids() const {
  std::vector<ComponentId> ids;
  ids.reserve(components_.size());
  for (const auto& c : components_) ids.push_back(c.id);
  return ids;
}

void GooweEnsemble::publish_components() {
  const auto ids = component_ids();
  windowed_.set_components(ids);
}

ScoreVector GooweEnsemble::predict(std::span<const double> x) {
  schema_.validate(x);
  pending_x_.assign(x.begin(), x.end());
  has_pending_ = true;
  if (components_.empty()) {
    pending_block_.clear();
    last_weights_.clear();
    return ScoreVector::uniform(classes_);
  }
  pending_block_ = score_block(components_, x, classes_);
  const WeightSystem& system = windowed_.system([this](ComponentId id, std::span<const double> xs) {
    for (const auto& c : components_)
      if (c.id == id) return c.model->normalized_score(xs);
    throw ConsistencyError("unknown component id");
  });
  if (system.instances() == 0) {
    last_weights_.assign(components_.size(), 1.0 / static_cast<double>(components_.size()));
  } else {
    WeightSolution sol = solve_weights(system, config_.solver);
    if (sol.fallback) ++counters_.fallbacks;
    last_weights_ = std::move(sol.w);
  }
  return aggregate_votes(pending_block_, classes_, last_weights_);
}

void GooweEnsemble::learn(const Instance& inst) {
  schema_.validate(inst.x);
  if (inst.label >= classes_) throw SchemaError("label out of range");
  if (!components_.empty()) {
    if (!has_pending_ || pending_x_ != inst.x) pending_block_ = score_block(components_, inst.x, classes_);
    windowed_.push(inst, cache_from_block(components_, pending_block_, classes_));
  } else {
    windowed_.push(inst, CachedScores{});
  }
  has_pending_ = false;
  if (auto full = chunk_.push(inst)) train_on_chunk(*full);
  if (memory_bytes() >= config_.memory_limit) prune_all();
}

ScoreVector GooweEnsemble::process_instance(const Instance& inst) {
  ScoreVector out = predict(inst.x);
  learn(inst);
  return out;
}

WeightSystem GooweEnsemble::build_chunk_system(std::span<const Instance> chunk) const {
  WeightSystem system(components_.size());
  for (const Instance& inst : chunk)
    system.add(score_block(components_, inst.x, classes_), classes_, inst.label, 1.0);
  return system;
}

std::size_t GooweEnsemble::removal_index(std::span<const double> w) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < w.size(); ++j)
    if (std::abs(w[j]) < std::abs(w[best])) best = j;
  return best;
}

ComponentId GooweEnsemble::add_component(std::unique_ptr<IncrementalClassifier> model) {
  if (model->class_count() != classes_) throw SchemaError("component class count does not match schema");
  const ComponentId id = next_id_++;
  components_.push_back({id, std::move(model)});
  publish_components();
  return id;
}

void GooweEnsemble::train_on_chunk(const std::vector<Instance>& chunk) {
  ++counters_.chunks;
  auto candidate = factory_();
  for (const Instance& inst : chunk) candidate->train_on(inst);

  if (components_.size() >= config_.max_components) {
    const WeightSolution sol = solve_weights(build_chunk_system(chunk), config_.solver);
    if (sol.fallback) ++counters_.fallbacks;
    const std::size_t drop = removal_index(sol.w);
    removed_.push_back(components_[drop].id);
    components_.erase(components_.begin() + static_cast<std::ptrdiff_t>(drop));
    ++counters_.removals;
  }
  for (auto& c : components_)
    for (const Instance& inst : chunk) c.model->train_on(inst);
  add_component(std::move(candidate));
}

void GooweEnsemble::prune_all() {
  ++counters_.prune_events;
  const std::size_t share = config_.memory_limit / config_.max_components;
  for (auto& c : components_) c.model->prune(share);
}

std::size_t GooweEnsemble::memory_bytes() const {
  std::size_t total = kBaseBytes;
  for (const auto& c : components_) total += c.model->memory_estimate();
  return total;
}

}  // namespace goowe
