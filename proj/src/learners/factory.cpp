// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/learners/factory.hpp"

namespace goowe {

LearnerFactory make_learner_factory(const LearnerSpec& spec, const StreamSchema& schema) {
  auto layout = std::make_shared<const AttributeLayout>(schema);
  switch (spec.kind) {
    case LearnerKind::kHoeffdingTree:
      return [layout, params = spec.tree]() -> std::unique_ptr<IncrementalClassifier> {
        return std::make_unique<HoeffdingTree>(layout, params);
      };
    case LearnerKind::kNaiveBayes:
      return [layout]() -> std::unique_ptr<IncrementalClassifier> {
        return std::make_unique<NaiveBayesClassifier>(layout);
      };
  }
  throw SchemaError("unknown learner kind");
}

std::string learner_name(LearnerKind kind) {
  return kind == LearnerKind::kHoeffdingTree ? "ht" : "nb";
}

}  // namespace goowe
