// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goowe {

// Error families. Everything thrown by the library derives from Error so the
// CLI can map failures onto exit codes without inspecting messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input does not match the declared stream schema (lengths, label range).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A score vector entry was negative or non-finite.
class InvalidScoreError : public Error {
 public:
  using Error::Error;
};

/// Internal bookkeeping disagreed with itself (dimension mismatch, missing cache).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or descriptor. `line()` is 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using ClassIndex = std::uint32_t;

enum class AttributeKind : std::uint8_t { kNumeric, kNominal };

/// One attribute value: a finite real or a category index below its cardinality.
class FeatureValue {
 public:
  static FeatureValue numeric(double value);
  static FeatureValue nominal(std::uint32_t index, std::uint32_t cardinality);

  AttributeKind kind() const noexcept { return kind_; }
  bool is_nominal() const noexcept { return kind_ == AttributeKind::kNominal; }
  double numeric_value() const noexcept { return value_; }
  std::uint32_t index() const noexcept { return static_cast<std::uint32_t>(value_); }
  std::uint32_t cardinality() const noexcept { return cardinality_; }

  // Instances store attributes densely as doubles; nominal indices are exact.
  double encoded() const noexcept { return value_; }

 private:
  FeatureValue(AttributeKind kind, double value, std::uint32_t cardinality)
      : kind_(kind), value_(value), cardinality_(cardinality) {}

  AttributeKind kind_;
  double value_;
  std::uint32_t cardinality_;
};

struct AttributeInfo {
  std::string name;
  AttributeKind kind = AttributeKind::kNumeric;
  std::vector<std::string> values;  // nominal domain, declaration order

  std::uint32_t cardinality() const noexcept { return static_cast<std::uint32_t>(values.size()); }
  bool is_nominal() const noexcept { return kind == AttributeKind::kNominal; }

  static AttributeInfo numeric(std::string name);
  static AttributeInfo nominal(std::string name, std::vector<std::string> values);
  static AttributeInfo nominal(std::string name, std::uint32_t cardinality);
};

/// Attribute descriptors plus the class domain. p >= 2, at least one attribute.
class StreamSchema {
 public:
  StreamSchema(std::vector<AttributeInfo> attributes, std::vector<std::string> class_names,
               std::string relation = "stream");

  /// Convenience: all-numeric schema with generated names.
  static StreamSchema all_numeric(std::size_t attributes, std::size_t classes,
                                  std::string relation = "stream");

  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  std::size_t class_count() const noexcept { return class_names_.size(); }
  const AttributeInfo& attribute(std::size_t i) const { return attributes_.at(i); }
  std::span<const AttributeInfo> attributes() const noexcept { return attributes_; }
  std::span<const std::string> class_names() const noexcept { return class_names_; }
  const std::string& relation() const noexcept { return relation_; }

  // Positions of numeric / nominal attributes in declaration order.
  std::span<const std::size_t> numeric_indices() const noexcept { return numeric_; }
  std::span<const std::size_t> nominal_indices() const noexcept { return nominal_; }

  /// Throws SchemaError when the dense vector does not conform.
  void validate(std::span<const double> x) const;

  bool compatible_with(const StreamSchema& other) const;

 private:
  std::vector<AttributeInfo> attributes_;
  std::vector<std::string> class_names_;
  std::string relation_;
  std::vector<std::size_t> numeric_;
  std::vector<std::size_t> nominal_;
};

/// One labeled stream record. Features are stored densely; nominal values
/// hold their category index.
struct Instance {
  std::vector<double> x;
  ClassIndex label = 0;
  double weight = 1.0;
  bool outlier = false;  // injected blip, see RbfGenerator

  static Instance make(const StreamSchema& schema, std::span<const FeatureValue> features,
                       ClassIndex label, double weight = 1.0);
};

/// Per-class relevance scores, normalized to sum to one (or uniform 1/p).
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::vector<double> values) : values_(std::move(values)) {}
  static ScoreVector uniform(std::size_t p);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }
  const double* data() const noexcept { return values_.data(); }

  /// Lowest index attaining the maximum.
  ClassIndex argmax() const;

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  std::vector<double> values_;
};

/// Divides by the sum; a zero sum maps to the uniform vector.
ScoreVector normalize_scores(std::span<const double> raw, std::size_t p);

/// One-hot vector of the true class.
class IdealPoint {
 public:
  IdealPoint(ClassIndex label, std::size_t p);
  ClassIndex label() const noexcept { return label_; }
  std::size_t size() const noexcept { return p_; }
  double operator[](std::size_t k) const noexcept { return k == label_ ? 1.0 : 0.0; }
  std::vector<double> dense() const;

 private:
  ClassIndex label_;
  std::size_t p_;
};

inline IdealPoint ideal_point(ClassIndex label, std::size_t p) { return IdealPoint(label, p); }

}  // namespace goowe
