// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/core/window.hpp"

#include <algorithm>

namespace goowe {

const ScoreVector* CachedScores::find(ComponentId id) const noexcept {
  for (const auto& [key, value] : entries_)
    if (key == id) return &value;
  return nullptr;
}

void CachedScores::set(ComponentId id, ScoreVector scores) {
  for (auto& [key, value] : entries_) {
    if (key == id) {
      value = std::move(scores);
      return;
    }
  }
  entries_.emplace_back(id, std::move(scores));
}

void CachedScores::erase(ComponentId id) {
  std::erase_if(entries_, [id](const auto& e) { return e.first == id; });
}

bool CachedScores::covers(std::span<const ComponentId> ids) const noexcept {
  return std::all_of(ids.begin(), ids.end(), [this](ComponentId id) { return find(id) != nullptr; });
}

InstanceWindow::InstanceWindow(std::size_t capacity) : slots_(capacity) {
  if (capacity == 0) throw ConsistencyError("instance window capacity must be positive");
}

std::optional<WindowSlot> InstanceWindow::push(Instance inst, CachedScores scores,
                                               std::span<const ComponentId> live) {
  if (!scores.covers(live)) throw ConsistencyError("window push is missing a live component's scores");
  std::optional<WindowSlot> evicted;
  if (full()) {
    evicted = std::move(slots_[head_]);
    slots_[head_] = WindowSlot{std::move(inst), std::move(scores)};
    head_ = (head_ + 1) % slots_.size();
    return evicted;
  }
  slots_[physical(size_)] = WindowSlot{std::move(inst), std::move(scores)};
  ++size_;
  return evicted;
}

WindowSlot& InstanceWindow::at(std::size_t i) {
  if (i >= size_) throw ConsistencyError("window index out of range");
  return slots_[physical(i)];
}

const WindowSlot& InstanceWindow::at(std::size_t i) const {
  if (i >= size_) throw ConsistencyError("window index out of range");
  return slots_[physical(i)];
}

void InstanceWindow::forget_component(ComponentId id) {
  for (std::size_t i = 0; i < size_; ++i) slots_[physical(i)].scores.erase(id);
}

void InstanceWindow::clear() noexcept {
  for (auto& s : slots_) s = WindowSlot{};
  head_ = 0;
  size_ = 0;
}

DataChunk::DataChunk(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw ConsistencyError("chunk capacity must be positive");
  buffer_.reserve(capacity);
}

std::optional<std::vector<Instance>> DataChunk::push(Instance inst) {
  buffer_.push_back(std::move(inst));
  if (buffer_.size() < capacity_) return std::nullopt;
  std::vector<Instance> out;
  out.swap(buffer_);
  buffer_.reserve(capacity_);
  return out;
}

}  // namespace goowe
