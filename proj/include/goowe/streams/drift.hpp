// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "goowe/core/rng.hpp"
#include "goowe/streams/source.hpp"

namespace goowe {

/// Probability that instance t of a join centred at t0 with width W comes
/// from the second stream: 1 / (1 + exp(-4 (t - t0) / W)). W = 0 is a hard
/// switch at t0 (t >= t0 selects the second stream).
double sigmoid_probability(double t, double t0, double width);

/// c = a (+)^W_t0 b. Only the chosen stream advances.
class SigmoidJoin final : public StreamSource {
 public:
  SigmoidJoin(StreamPtr a, StreamPtr b, double t0, double width, std::uint64_t seed);
  const StreamSchema& schema() const override { return a_->schema(); }
  std::optional<Instance> next() override;
  /// True when the most recent instance came from b.
  bool last_from_b() const noexcept { return last_from_b_; }
  std::uint64_t position() const noexcept { return t_; }

 private:
  StreamPtr a_;
  StreamPtr b_;
  double t0_;
  double width_;
  Rng rng_;
  std::uint64_t t_ = 0;
  bool last_from_b_ = false;
};

/// Concepts c_0 .. c_k joined at t_i = (i + 1) * period, each join of width W,
/// evaluated against one global clock: ((c_0 (+) c_1) (+) c_2) ...
class ConceptDriftSequence final : public StreamSource {
 public:
  ConceptDriftSequence(std::vector<StreamPtr> concepts, double period, double width, std::uint64_t seed);
  const StreamSchema& schema() const override { return concepts_.front()->schema(); }
  std::optional<Instance> next() override;
  /// Concept index of the most recent instance.
  std::size_t last_concept() const noexcept { return last_; }

 private:
  std::vector<StreamPtr> concepts_;
  double period_;
  double width_;
  Rng rng_;
  std::uint64_t t_ = 0;
  std::size_t last_ = 0;
};

}  // namespace goowe
