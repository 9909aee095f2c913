// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <string>

#include "goowe/core/classifier.hpp"
#include "goowe/learners/hoeffding_tree.hpp"

namespace goowe {

enum class LearnerKind { kHoeffdingTree, kNaiveBayes };

struct LearnerSpec {
  LearnerKind kind = LearnerKind::kHoeffdingTree;
  HoeffdingTreeParams tree;
};

using LearnerFactory = std::function<std::unique_ptr<IncrementalClassifier>()>;

/// Builds fresh base learners for `schema`. All learners share one layout.
LearnerFactory make_learner_factory(const LearnerSpec& spec, const StreamSchema& schema);

std::string learner_name(LearnerKind kind);

}  // namespace goowe
