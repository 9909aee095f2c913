// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "goowe/core/types.hpp"

namespace goowe {

using ComponentId = std::uint64_t;

/// Score vectors a window slot remembers, keyed by the component that produced them.
class CachedScores {
 public:
  const ScoreVector* find(ComponentId id) const noexcept;
  void set(ComponentId id, ScoreVector scores);
  void erase(ComponentId id);
  bool covers(std::span<const ComponentId> ids) const noexcept;
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

 private:
  std::vector<std::pair<ComponentId, ScoreVector>> entries_;
};

struct WindowSlot {
  Instance instance;
  CachedScores scores;
};

/// Sliding window over the latest `capacity` labeled instances. FIFO eviction.
class InstanceWindow {
 public:
  explicit InstanceWindow(std::size_t capacity);

  /// Appends `inst` as the newest slot. `scores` must hold an entry for every id
  /// in `live`. Returns the evicted oldest slot when the window was full.
  std::optional<WindowSlot> push(Instance inst, CachedScores scores, std::span<const ComponentId> live);

  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return slots_.size(); }
  bool empty() const noexcept { return size_ == 0; }
  bool full() const noexcept { return size_ == slots_.size(); }

  /// Index 0 is the oldest slot, size()-1 the newest.
  WindowSlot& at(std::size_t i);
  const WindowSlot& at(std::size_t i) const;

  void forget_component(ComponentId id);
  void clear() noexcept;

 private:
  std::size_t physical(std::size_t i) const noexcept { return (head_ + i) % slots_.size(); }

  std::vector<WindowSlot> slots_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
};

/// Tumbling buffer of `capacity` instances used to train new components.
class DataChunk {
 public:
  explicit DataChunk(std::size_t capacity);

  /// Buffers `inst`; when the fill reaches capacity the buffered instances are
  /// returned and the chunk is reset.
  std::optional<std::vector<Instance>> push(Instance inst);

  std::size_t size() const noexcept { return buffer_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::span<const Instance> instances() const noexcept { return buffer_; }
  void clear() noexcept { buffer_.clear(); }

 private:
  std::size_t capacity_;
  std::vector<Instance> buffer_;
};

}  // namespace goowe
