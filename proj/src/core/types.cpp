// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/core/types.hpp"

#include <algorithm>
#include <cmath>

namespace goowe {

FeatureValue FeatureValue::numeric(double value) {
  if (!std::isfinite(value)) throw SchemaError("numeric feature value must be finite");
  return FeatureValue(AttributeKind::kNumeric, value, 0);
}

FeatureValue FeatureValue::nominal(std::uint32_t index, std::uint32_t cardinality) {
  if (index >= cardinality)
    throw SchemaError("nominal index " + std::to_string(index) + " >= cardinality " +
                      std::to_string(cardinality));
  return FeatureValue(AttributeKind::kNominal, static_cast<double>(index), cardinality);
}

AttributeInfo AttributeInfo::numeric(std::string name) {
  return AttributeInfo{std::move(name), AttributeKind::kNumeric, {}};
}

AttributeInfo AttributeInfo::nominal(std::string name, std::vector<std::string> values) {
  return AttributeInfo{std::move(name), AttributeKind::kNominal, std::move(values)};
}

AttributeInfo AttributeInfo::nominal(std::string name, std::uint32_t cardinality) {
  std::vector<std::string> values;
  values.reserve(cardinality);
  for (std::uint32_t v = 0; v < cardinality; ++v) values.push_back("v" + std::to_string(v));
  return nominal(std::move(name), std::move(values));
}

StreamSchema::StreamSchema(std::vector<AttributeInfo> attributes,
                           std::vector<std::string> class_names, std::string relation)
    : attributes_(std::move(attributes)),
      class_names_(std::move(class_names)),
      relation_(std::move(relation)) {
  if (class_names_.size() < 2) throw SchemaError("a stream needs at least two classes");
  if (attributes_.empty()) throw SchemaError("a stream needs at least one attribute");
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const auto& a = attributes_[i];
    if (a.is_nominal()) {
      if (a.values.empty()) throw SchemaError("nominal attribute '" + a.name + "' has no values");
      nominal_.push_back(i);
    } else {
      numeric_.push_back(i);
    }
  }
}

StreamSchema StreamSchema::all_numeric(std::size_t attributes, std::size_t classes,
                                       std::string relation) {
  std::vector<AttributeInfo> atts;
  atts.reserve(attributes);
  for (std::size_t i = 0; i < attributes; ++i) atts.push_back(AttributeInfo::numeric("att" + std::to_string(i + 1)));
  std::vector<std::string> names;
  for (std::size_t c = 0; c < classes; ++c) names.push_back("class" + std::to_string(c + 1));
  return StreamSchema(std::move(atts), std::move(names), std::move(relation));
}

void StreamSchema::validate(std::span<const double> x) const {
  if (x.size() != attributes_.size())
    throw SchemaError("instance has " + std::to_string(x.size()) + " attributes, schema declares " +
                      std::to_string(attributes_.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw SchemaError("attribute '" + attributes_[i].name + "' is not finite");
    if (attributes_[i].is_nominal()) {
      const double v = x[i];
      if (v < 0 || v != std::floor(v) || v >= attributes_[i].cardinality())
        throw SchemaError("attribute '" + attributes_[i].name + "' has invalid nominal index");
    }
  }
}

bool StreamSchema::compatible_with(const StreamSchema& other) const {
  if (other.attribute_count() != attribute_count() || other.class_count() != class_count()) return false;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].kind != other.attributes_[i].kind) return false;
    if (attributes_[i].cardinality() != other.attributes_[i].cardinality()) return false;
  }
  return true;
}

Instance Instance::make(const StreamSchema& schema, std::span<const FeatureValue> features,
                        ClassIndex label, double weight) {
  if (features.size() != schema.attribute_count())
    throw SchemaError("feature count does not match schema");
  if (label >= schema.class_count()) throw SchemaError("label out of range");
  if (!(weight >= 0.0) || !std::isfinite(weight)) throw SchemaError("instance weight must be non-negative");
  Instance inst;
  inst.x.reserve(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    const auto& att = schema.attribute(i);
    if (f.is_nominal() != att.is_nominal())
      throw SchemaError("attribute '" + att.name + "' kind mismatch");
    if (f.is_nominal() && f.cardinality() != att.cardinality())
      throw SchemaError("attribute '" + att.name + "' cardinality mismatch");
    inst.x.push_back(f.encoded());
  }
  inst.label = label;
  inst.weight = weight;
  return inst;
}

ScoreVector ScoreVector::uniform(std::size_t p) {
  return ScoreVector(std::vector<double>(p, 1.0 / static_cast<double>(p)));
}

ClassIndex ScoreVector::argmax() const {
  return static_cast<ClassIndex>(std::max_element(values_.begin(), values_.end()) - values_.begin());
}

ScoreVector normalize_scores(std::span<const double> raw, std::size_t p) {
  if (raw.size() != p)
    throw SchemaError("score vector has length " + std::to_string(raw.size()) + ", expected " +
                      std::to_string(p));
  double sum = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidScoreError("scores must be finite and non-negative");
    sum += v;
  }
  if (sum == 0.0) return ScoreVector::uniform(p);
  std::vector<double> out(raw.begin(), raw.end());
  for (double& v : out) v /= sum;
  return ScoreVector(std::move(out));
}

IdealPoint::IdealPoint(ClassIndex label, std::size_t p) : label_(label), p_(p) {
  if (label >= p) throw SchemaError("label " + std::to_string(label) + " outside " + std::to_string(p) + " classes");
}

std::vector<double> IdealPoint::dense() const {
  std::vector<double> v(p_, 0.0);
  v[label_] = 1.0;
  return v;
}

}  // namespace goowe
