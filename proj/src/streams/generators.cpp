// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/streams/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace goowe {

namespace {

std::vector<std::string> class_names(std::size_t p) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < p; ++c) out.push_back("class" + std::to_string(c));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

RbfGenerator::RbfGenerator(RbfParams params, std::uint64_t seed)
    : RbfGenerator(params, splitmix64(seed), splitmix64(seed ^ 0x5bd1e995ull)) {}

RbfGenerator::RbfGenerator(RbfParams params, std::uint64_t model_seed, std::uint64_t instance_seed)
    : params_(params),
      schema_(StreamSchema::all_numeric(params.attributes, params.classes, "rbf")),
      model_rng_(model_seed),
      rng_(instance_seed) {
  if (params_.centroids == 0) throw SchemaError("rbf needs at least one centroid");
  if (params_.drift_interval == 0) throw SchemaError("rbf drift interval must be positive");
  if (!(params_.blip_rate >= 0.0 && params_.blip_rate <= 1.0)) throw SchemaError("blip rate must lie in [0, 1]");
  const std::size_t d = params_.attributes;
  double total = 0.0;
  for (std::size_t i = 0; i < params_.centroids; ++i) {
    Centroid c;
    c.centre.resize(d);
    for (double& v : c.centre) v = model_rng_.uniform();
    c.label = static_cast<ClassIndex>(model_rng_.below(params_.classes));
    c.std_dev = model_rng_.uniform();
    c.weight = model_rng_.uniform();
    if (c.weight <= 0.0) c.weight = 0x1.0p-53;
    total += c.weight;
    cumulative_.push_back(total);
    centroids_.push_back(std::move(c));
  }
  directions_.resize(params_.centroids);
  for (auto& dir : directions_) {
    dir.resize(d);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& v : dir) {
        v = model_rng_.uniform(-1.0, 1.0);
        norm += v * v;
      }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& v : dir) v /= norm;
  }
}

void RbfGenerator::set_std_dev(double s) {
  for (auto& c : centroids_) c.std_dev = s;
}

void RbfGenerator::drift_step() {
  for (std::size_t i = 0; i < centroids_.size(); ++i) {
    auto& centre = centroids_[i].centre;
    auto& dir = directions_[i];
    for (std::size_t j = 0; j < centre.size(); ++j) {
      centre[j] += dir[j] * params_.drift_speed;
      if (centre[j] > 1.0) {
        centre[j] = 2.0 - centre[j];
        dir[j] = -dir[j];
      } else if (centre[j] < 0.0) {
        centre[j] = -centre[j];
        dir[j] = -dir[j];
      }
    }
  }
}

std::optional<Instance> RbfGenerator::next() {
  const std::size_t d = params_.attributes;
  const double u = rng_.uniform() * cumulative_.back();
  const std::size_t k = std::min<std::size_t>(
      static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin()),
      centroids_.size() - 1);
  const Centroid& c = centroids_[k];
  Instance inst;
  inst.x.resize(d);
  double norm = 0.0;
  for (double& v : inst.x) {
    v = rng_.uniform(-1.0, 1.0);
    norm += v * v;
  }
  const double magnitude = rng_.gaussian() * c.std_dev;
  const double scale = norm > 0.0 ? magnitude / std::sqrt(norm) : 0.0;
  for (std::size_t j = 0; j < d; ++j) inst.x[j] = c.centre[j] + inst.x[j] * scale;
  inst.label = c.label;
  if (params_.blip_rate > 0.0 && rng_.bernoulli(params_.blip_rate)) {
    inst.label = static_cast<ClassIndex>(rng_.below(params_.classes));
    inst.outlier = true;
  }
  ++produced_;
  if (params_.drift_speed != 0.0 && produced_ % params_.drift_interval == 0) drift_step();
  return inst;
}

// ---------------------------------------------------------------------------

SeaGenerator::SeaGenerator(SeaParams params, std::uint64_t seed)
    : params_(params), schema_(StreamSchema::all_numeric(3, 2, "sea")), rng_(splitmix64(seed)) {
  if (params_.function >= kSeaThresholds.size()) throw SchemaError("sea function index must be 0..3");
  if (!(params_.noise >= 0.0 && params_.noise <= 1.0)) throw SchemaError("noise must lie in [0, 1]");
}

ClassIndex SeaGenerator::label_of(std::span<const double> x) const noexcept {
  return x[0] + x[1] <= threshold() ? 1 : 0;
}

std::optional<Instance> SeaGenerator::next() {
  Instance inst;
  inst.x = {rng_.uniform(0.0, 10.0), rng_.uniform(0.0, 10.0), rng_.uniform(0.0, 10.0)};
  inst.label = label_of(inst.x);
  if (params_.noise > 0.0 && rng_.bernoulli(params_.noise)) inst.label = 1 - inst.label;
  return inst;
}

// ---------------------------------------------------------------------------

HyperplaneGenerator::HyperplaneGenerator(HyperplaneParams params, std::uint64_t seed)
    : params_(params),
      schema_(StreamSchema::all_numeric(params.attributes, 2, "hyperplane")),
      rng_(splitmix64(seed)) {
  if (!(params_.noise >= 0.0 && params_.noise <= 1.0)) throw SchemaError("noise must lie in [0, 1]");
  Rng model = rng_.split();
  weights_.resize(params_.attributes);
  directions_.assign(params_.attributes, 1);
  for (double& w : weights_) w = model.uniform();
}

ClassIndex HyperplaneGenerator::label_of(std::span<const double> x) const noexcept {
  double sum = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    sum += weights_[i] * x[i];
    total += weights_[i];
  }
  return sum >= 0.5 * total ? 1 : 0;
}

std::optional<Instance> HyperplaneGenerator::next() {
  Instance inst;
  inst.x.resize(params_.attributes);
  for (double& v : inst.x) v = rng_.uniform();
  last_clean_ = label_of(inst.x);
  inst.label = last_clean_;
  if (params_.noise > 0.0 && rng_.bernoulli(params_.noise)) inst.label = 1 - inst.label;
  if (params_.magnitude != 0.0) {
    const double step = params_.magnitude / static_cast<double>(params_.attributes);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      weights_[i] += directions_[i] * step;
      if (rng_.bernoulli(params_.reverse_probability)) directions_[i] = -directions_[i];
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------

namespace {

StreamSchema tree_schema(const RandomTreeParams& p) {
  std::vector<AttributeInfo> atts;
  for (std::size_t i = 0; i < p.nominal; ++i)
    atts.push_back(AttributeInfo::nominal("nom" + std::to_string(i), p.nominal_values));
  for (std::size_t i = 0; i < p.numeric; ++i) atts.push_back(AttributeInfo::numeric("num" + std::to_string(i)));
  return StreamSchema(std::move(atts), class_names(p.classes), "random_tree");
}

}  // namespace

RandomTreeGenerator::RandomTreeGenerator(RandomTreeParams params, std::uint64_t tree_seed,
                                         std::uint64_t instance_seed)
    : params_(params), schema_(tree_schema(params)), rng_(splitmix64(instance_seed)) {
  if (params_.nominal + params_.numeric == 0) throw SchemaError("random tree needs attributes");
  if (params_.nominal > 0 && params_.nominal_values < 2) throw SchemaError("nominal attributes need 2+ values");
  Rng model(splitmix64(tree_seed));
  std::vector<std::uint8_t> used(params_.nominal, 0);
  std::vector<double> lo(params_.numeric, 0.0), hi(params_.numeric, 1.0);
  grow(model, 0, used, lo, hi);
}

std::size_t RandomTreeGenerator::grow(Rng& rng, std::size_t depth, std::vector<std::uint8_t>& used_nominal,
                                      std::vector<double>& lo, std::vector<double>& hi) {
  const std::size_t index = nodes_.size();
  nodes_.emplace_back();
  const bool nominal_left = std::find(used_nominal.begin(), used_nominal.end(), 0) != used_nominal.end();
  const bool can_split = params_.numeric > 0 || nominal_left;
  if (!can_split || depth >= params_.max_depth ||
      (depth >= params_.first_leaf_level && rng.uniform() < params_.leaf_fraction)) {
    nodes_[index].label = static_cast<ClassIndex>(rng.below(params_.classes));
    return index;
  }
  // Pick among attributes still usable on this path.
  std::vector<std::size_t> options;
  for (std::size_t i = 0; i < params_.nominal; ++i)
    if (!used_nominal[i]) options.push_back(i);
  for (std::size_t i = 0; i < params_.numeric; ++i) options.push_back(params_.nominal + i);
  const std::size_t att = options[rng.below(options.size())];
  nodes_[index].leaf = false;
  nodes_[index].attribute = att;
  std::vector<std::size_t> children;
  if (att < params_.nominal) {
    used_nominal[att] = 1;
    for (std::uint32_t v = 0; v < params_.nominal_values; ++v)
      children.push_back(grow(rng, depth + 1, used_nominal, lo, hi));
    used_nominal[att] = 0;
  } else {
    const std::size_t o = att - params_.nominal;
    const double t = rng.uniform(lo[o], hi[o]);
    nodes_[index].threshold = t;
    const double saved_hi = hi[o];
    hi[o] = t;
    children.push_back(grow(rng, depth + 1, used_nominal, lo, hi));
    hi[o] = saved_hi;
    const double saved_lo = lo[o];
    lo[o] = t;
    children.push_back(grow(rng, depth + 1, used_nominal, lo, hi));
    lo[o] = saved_lo;
  }
  nodes_[index].children = std::move(children);
  return index;
}

ClassIndex RandomTreeGenerator::label_of(std::span<const double> x) const {
  std::size_t i = 0;
  while (!nodes_[i].leaf) {
    const Node& n = nodes_[i];
    if (n.attribute < params_.nominal) {
      i = n.children[static_cast<std::size_t>(x[n.attribute])];
    } else {
      i = n.children[x[n.attribute] < n.threshold ? 0 : 1];
    }
  }
  return nodes_[i].label;
}

std::optional<Instance> RandomTreeGenerator::next() {
  Instance inst;
  inst.x.resize(params_.nominal + params_.numeric);
  for (std::size_t i = 0; i < params_.nominal; ++i) inst.x[i] = static_cast<double>(rng_.below(params_.nominal_values));
  for (std::size_t i = 0; i < params_.numeric; ++i) inst.x[params_.nominal + i] = rng_.uniform();
  inst.label = label_of(inst.x);
  return inst;
}

// ---------------------------------------------------------------------------

const std::array<std::array<std::uint8_t, 7>, 10> LedGenerator::kSegmentTable{{
    {1, 1, 1, 0, 1, 1, 1},  // 0
    {0, 0, 1, 0, 0, 1, 0},  // 1
    {1, 0, 1, 1, 1, 0, 1},  // 2
    {1, 0, 1, 1, 0, 1, 1},  // 3
    {0, 1, 1, 1, 0, 1, 0},  // 4
    {1, 1, 0, 1, 0, 1, 1},  // 5
    {1, 1, 0, 1, 1, 1, 1},  // 6
    {1, 0, 1, 0, 0, 1, 0},  // 7
    {1, 1, 1, 1, 1, 1, 1},  // 8
    {1, 1, 1, 1, 0, 1, 1},  // 9
}};

namespace {

StreamSchema led_schema() {
  std::vector<AttributeInfo> atts;
  for (std::size_t i = 0; i < LedGenerator::kAttributes; ++i)
    atts.push_back(AttributeInfo::nominal("att" + std::to_string(i + 1), {"0", "1"}));
  std::vector<std::string> digits;
  for (int d = 0; d < 10; ++d) digits.push_back(std::to_string(d));
  return StreamSchema(std::move(atts), std::move(digits), "led");
}

}  // namespace

LedGenerator::LedGenerator(LedParams params, std::uint64_t seed)
    : params_(params), schema_(led_schema()), rng_(splitmix64(seed)) {
  if (!(params_.noise >= 0.0 && params_.noise <= 1.0)) throw SchemaError("noise must lie in [0, 1]");
  if (params_.drift_attributes > kSegments) throw SchemaError("at most 7 drifting attributes");
  std::iota(positions_.begin(), positions_.end(), std::size_t{0});
  for (std::size_t i = 0; i < params_.drift_attributes; ++i) std::swap(positions_[i], positions_[i + kSegments]);
}

std::optional<Instance> LedGenerator::next() {
  Instance inst;
  inst.x.assign(kAttributes, 0.0);
  const auto digit = static_cast<std::size_t>(rng_.below(10));
  for (std::size_t a = 0; a < kAttributes; ++a) {
    std::uint8_t bit = a < kSegments ? kSegmentTable[digit][a] : static_cast<std::uint8_t>(rng_.below(2));
    if (params_.noise > 0.0 && rng_.bernoulli(params_.noise)) bit ^= 1;
    inst.x[positions_[a]] = bit;
  }
  inst.label = static_cast<ClassIndex>(digit);
  return inst;
}

// ---------------------------------------------------------------------------

NoiseGenerator::NoiseGenerator(std::size_t attributes, std::size_t classes, std::uint64_t seed)
    : schema_(StreamSchema::all_numeric(attributes, classes, "noise")), rng_(splitmix64(seed)) {}

std::optional<Instance> NoiseGenerator::next() {
  Instance inst;
  inst.x.resize(schema_.attribute_count());
  for (double& v : inst.x) v = rng_.uniform();
  inst.label = static_cast<ClassIndex>(rng_.below(schema_.class_count()));
  return inst;
}

}  // namespace goowe
