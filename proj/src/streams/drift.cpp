// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/streams/drift.hpp"

#include <cmath>

namespace goowe {

double sigmoid_probability(double t, double t0, double width) {
  if (width <= 0.0) return t >= t0 ? 1.0 : 0.0;
  return 1.0 / (1.0 + std::exp(-4.0 * (t - t0) / width));
}

namespace {

void check_compatible(const StreamSource& a, const StreamSource& b) {
  if (!a.schema().compatible_with(b.schema())) throw SchemaError("joined streams have different schemas");
}

}  // namespace

SigmoidJoin::SigmoidJoin(StreamPtr a, StreamPtr b, double t0, double width, std::uint64_t seed)
    : a_(std::move(a)), b_(std::move(b)), t0_(t0), width_(width), rng_(splitmix64(seed)) {
  if (!a_ || !b_) throw SchemaError("sigmoid join needs two streams");
  if (width_ < 0.0) throw SchemaError("join width must be non-negative");
  check_compatible(*a_, *b_);
}

std::optional<Instance> SigmoidJoin::next() {
  const double p = sigmoid_probability(static_cast<double>(t_), t0_, width_);
  ++t_;
  last_from_b_ = rng_.uniform() < p;
  return last_from_b_ ? b_->next() : a_->next();
}

ConceptDriftSequence::ConceptDriftSequence(std::vector<StreamPtr> concepts, double period, double width,
                                           std::uint64_t seed)
    : concepts_(std::move(concepts)), period_(period), width_(width), rng_(splitmix64(seed)) {
  if (concepts_.empty()) throw SchemaError("drift sequence needs at least one concept");
  if (!(period_ > 0.0)) throw SchemaError("drift period must be positive");
  if (width_ < 0.0) throw SchemaError("join width must be non-negative");
  for (const auto& c : concepts_) check_compatible(*concepts_.front(), *c);
}

std::optional<Instance> ConceptDriftSequence::next() {
  const double t = static_cast<double>(t_++);
  std::size_t chosen = 0;
  // Outermost join first: the latest boundary claims the instance with its
  // sigmoid probability, otherwise the decision falls to the inner joins.
  for (std::size_t i = concepts_.size() - 1; i >= 1; --i) {
    const double t0 = period_ * static_cast<double>(i);
    const double p = sigmoid_probability(t, t0, width_);
    if (p == 0.0) continue;
    if (p == 1.0 || rng_.uniform() < p) {
      chosen = i;
      break;
    }
  }
  last_ = chosen;
  return concepts_[chosen]->next();
}

}  // namespace goowe
