// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/core/window.hpp"

namespace goowe {

struct Component {
  ComponentId id;
  std::unique_ptr<IncrementalClassifier> model;
};

/// Normalized scores of every component for `x`, back to back (m x p, row-major).
std::vector<double> score_block(std::span<const Component> components, std::span<const double> x,
                                std::size_t p);

/// Splits a score block into per-component cache entries.
CachedScores cache_from_block(std::span<const Component> components, std::span<const double> block,
                              std::size_t p);

}  // namespace goowe
