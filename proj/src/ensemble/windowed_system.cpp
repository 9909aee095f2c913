// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/ensemble/windowed_system.hpp"

#include <algorithm>

namespace goowe {

WindowedWeightSystem::WindowedWeightSystem(std::size_t solve_size, std::size_t capacity,
                                           std::size_t classes)
    : solve_size_(solve_size), classes_(classes), window_(std::max(solve_size, capacity)) {
  if (solve_size == 0) throw ConsistencyError("instance window length must be positive");
}

void WindowedWeightSystem::set_components(std::span<const ComponentId> ids) {
  for (ComponentId old : ids_)
    if (std::find(ids.begin(), ids.end(), old) == ids.end()) window_.forget_component(old);
  ids_.assign(ids.begin(), ids.end());
  stale_ = true;
}

std::vector<double> WindowedWeightSystem::block_for(const WindowSlot& slot) const {
  std::vector<double> block;
  block.reserve(ids_.size() * classes_);
  for (ComponentId id : ids_) {
    const ScoreVector* s = slot.scores.find(id);
    if (s == nullptr) throw ConsistencyError("window slot lacks scores for component " + std::to_string(id));
    block.insert(block.end(), s->values().begin(), s->values().end());
  }
  return block;
}

void WindowedWeightSystem::push(Instance inst, CachedScores scores) {
  if (!stale_) {
    if (window_.size() >= solve_size_) {
      const WindowSlot& leaving = window_.at(window_.size() - solve_size_);
      system_.add(block_for(leaving), classes_, leaving.instance.label, -1.0);
    }
  }
  const ClassIndex label = inst.label;
  window_.push(std::move(inst), std::move(scores), ids_);
  if (!stale_) system_.add(block_for(window_.at(window_.size() - 1)), classes_, label, 1.0);
}

WeightSystem WindowedWeightSystem::recompute() const {
  WeightSystem s(ids_.size());
  const std::size_t begin = window_.size() - solved_instances();
  for (std::size_t i = begin; i < window_.size(); ++i) {
    const auto& slot = window_.at(i);
    s.add(block_for(slot), classes_, slot.instance.label, 1.0);
  }
  return s;
}

const WeightSystem& WindowedWeightSystem::system(const Scorer& scorer) {
  if (!stale_) return system_;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    auto& slot = window_.at(i);
    for (ComponentId id : ids_)
      if (slot.scores.find(id) == nullptr) slot.scores.set(id, scorer(id, slot.instance.x));
  }
  system_ = recompute();
  stale_ = false;
  return system_;
}

}  // namespace goowe
