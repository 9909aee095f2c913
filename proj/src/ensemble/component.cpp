// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/ensemble/component.hpp"

namespace goowe {

std::vector<double> score_block(std::span<const Component> components, std::span<const double> x,
                                std::size_t p) {
  std::vector<double> block(components.size() * p);
  for (std::size_t j = 0; j < components.size(); ++j) {
    const std::span<double> row(block.data() + j * p, p);
    components[j].model->score(x, row);
    const ScoreVector s = normalize_scores(row, p);
    std::copy(s.values().begin(), s.values().end(), row.begin());
  }
  return block;
}

CachedScores cache_from_block(std::span<const Component> components, std::span<const double> block,
                              std::size_t p) {
  CachedScores cache;
  for (std::size_t j = 0; j < components.size(); ++j)
    cache.set(components[j].id,
              ScoreVector(std::vector<double>(block.begin() + j * p, block.begin() + (j + 1) * p)));
  return cache;
}

}  // namespace goowe
