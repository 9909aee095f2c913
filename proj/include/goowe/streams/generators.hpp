// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goowe/core/rng.hpp"
#include "goowe/streams/source.hpp"

namespace goowe {

// Every generator draws its model (centroids, trees, weights) from one child
// of the seed generator and its instances from another, so changing how many
// instances are consumed never changes the concept.

struct RbfParams {
  std::size_t classes = 2;
  std::size_t attributes = 10;
  std::size_t centroids = 50;
  double drift_speed = 0.0;       // distance moved per drift step
  std::size_t drift_interval = 500;  // instances between drift steps
  double blip_rate = 0.0;          // fraction of instances replaced by uniform-label outliers
};

/// Random radial-basis-function stream. Centroids carry a centre in [0,1]^d,
/// a class, a standard deviation and a sampling weight. An instance picks a
/// centroid proportionally to weight and is displaced from its centre along a
/// random unit direction by a Gaussian(0, std) distance. With a drift speed,
/// every centroid moves along its own direction, bouncing off the unit cube.
class RbfGenerator final : public StreamSource {
 public:
  struct Centroid {
    std::vector<double> centre;
    double std_dev;
    ClassIndex label;
    double weight;
  };

  RbfGenerator(RbfParams params, std::uint64_t model_seed, std::uint64_t instance_seed);
  RbfGenerator(RbfParams params, std::uint64_t seed);

  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override;

  std::span<const Centroid> centroids() const noexcept { return centroids_; }
  const RbfParams& params() const noexcept { return params_; }

  /// Test hook: overrides every centroid's standard deviation.
  void set_std_dev(double s);

 private:
  void drift_step();

  RbfParams params_;
  StreamSchema schema_;
  Rng model_rng_;
  Rng rng_;
  std::vector<Centroid> centroids_;
  std::vector<std::vector<double>> directions_;
  std::vector<double> cumulative_;
  std::uint64_t produced_ = 0;
};

struct SeaParams {
  std::size_t function = 0;  // index into kSeaThresholds
  double noise = 0.0;        // label flip probability
};

inline constexpr std::array<double, 4> kSeaThresholds{8.0, 9.0, 7.0, 9.5};

/// Three uniform attributes in [0,10]; label 1 when att1 + att2 <= theta.
class SeaGenerator final : public StreamSource {
 public:
  SeaGenerator(SeaParams params, std::uint64_t seed);
  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  double threshold() const noexcept { return kSeaThresholds[params_.function]; }
  ClassIndex label_of(std::span<const double> x) const noexcept;

 private:
  SeaParams params_;
  StreamSchema schema_;
  Rng rng_;
};

struct HyperplaneParams {
  std::size_t attributes = 10;
  double magnitude = 0.0;  // per-instance weight change, spread over the attributes
  double noise = 0.0;
  double reverse_probability = 0.1;
};

/// Rotating hyperplane in [0,1]^d. Label 1 when sum w_i x_i >= w_0 with
/// w_0 = sum w_i / 2. After each instance every w_i moves by magnitude/d in
/// its current direction, which flips with reverse_probability.
class HyperplaneGenerator final : public StreamSource {
 public:
  HyperplaneGenerator(HyperplaneParams params, std::uint64_t seed);
  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  std::span<const double> weights() const noexcept { return weights_; }
  ClassIndex label_of(std::span<const double> x) const noexcept;
  /// Noise-free label of the most recent instance.
  ClassIndex last_clean_label() const noexcept { return last_clean_; }

 private:
  HyperplaneParams params_;
  StreamSchema schema_;
  Rng rng_;
  std::vector<double> weights_;
  std::vector<int> directions_;
  ClassIndex last_clean_ = 0;
};

struct RandomTreeParams {
  std::size_t classes = 2;
  std::size_t nominal = 5;
  std::size_t numeric = 5;
  std::uint32_t nominal_values = 5;
  std::size_t max_depth = 5;
  std::size_t first_leaf_level = 3;
  double leaf_fraction = 0.15;
};

/// Labels uniform attributes with a randomly grown decision tree.
class RandomTreeGenerator final : public StreamSource {
 public:
  RandomTreeGenerator(RandomTreeParams params, std::uint64_t tree_seed, std::uint64_t instance_seed);
  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  ClassIndex label_of(std::span<const double> x) const;
  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    bool leaf = true;
    ClassIndex label = 0;
    std::size_t attribute = 0;  // schema position
    double threshold = 0.0;     // numeric split value
    std::vector<std::size_t> children;
  };
  std::size_t grow(Rng& rng, std::size_t depth, std::vector<std::uint8_t>& used_nominal,
                   std::vector<double>& lo, std::vector<double>& hi);

  RandomTreeParams params_;
  StreamSchema schema_;
  Rng rng_;
  std::vector<Node> nodes_;
};

struct LedParams {
  double noise = 0.0;              // per-attribute inversion probability
  std::size_t drift_attributes = 0;  // relevant attributes swapped with irrelevant ones
};

/// Seven-segment digit stream: 7 segment attributes plus 17 irrelevant binary
/// attributes, each inverted with the noise probability. The digit is the label.
class LedGenerator final : public StreamSource {
 public:
  static constexpr std::size_t kSegments = 7;
  static constexpr std::size_t kAttributes = 24;
  static const std::array<std::array<std::uint8_t, 7>, 10> kSegmentTable;

  LedGenerator(LedParams params, std::uint64_t seed);
  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override;
  /// Schema position holding segment `s`.
  std::size_t segment_position(std::size_t s) const noexcept { return positions_[s]; }

 private:
  LedParams params_;
  StreamSchema schema_;
  Rng rng_;
  std::array<std::size_t, kAttributes> positions_{};
};

/// Uniform features and labels drawn independently: nothing to learn.
class NoiseGenerator final : public StreamSource {
 public:
  NoiseGenerator(std::size_t attributes, std::size_t classes, std::uint64_t seed);
  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override;

 private:
  StreamSchema schema_;
  Rng rng_;
};

}  // namespace goowe
