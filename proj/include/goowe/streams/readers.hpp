// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "goowe/streams/source.hpp"

namespace goowe {

/// Schema for a headerless CSV stream: the attribute columns (in order) and a
/// class column. Nominal cells and class cells hold value names.
struct CsvLayout {
  StreamSchema schema;
  std::size_t class_column;  // defaults to the last column
};

/// Sidecar descriptor path for a CSV file: "<file>.schema.json".
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// Sidecar JSON:
///   {"relation": "...",
///    "attributes": [{"name": "a", "type": "numeric"},
///                   {"name": "b", "type": "nominal", "values": ["x", "y"]}],
///    "class": {"name": "class", "values": ["c0", "c1"]},
///    "class_column": 2}                       // optional, default last
CsvLayout read_sidecar(const std::filesystem::path& path);
void write_sidecar(const std::filesystem::path& path, const StreamSchema& schema);

/// Lazily reads a headerless CSV file row by row.
class CsvSource final : public StreamSource {
 public:
  CsvSource(const std::filesystem::path& path, CsvLayout layout);
  /// Reads the schema from the sidecar next to `path`.
  explicit CsvSource(const std::filesystem::path& path);

  const StreamSchema& schema() const override { return layout_.schema; }
  std::optional<Instance> next() override;

 private:
  CsvLayout layout_;
  std::vector<AttributeInfo> columns_;  // attributes with the class spliced in
  std::ifstream in_;
  std::size_t line_ = 0;
  std::string buffer_;
};

/// Lazily reads an ARFF file (@relation, @attribute numeric|real|integer|{...},
/// @data). The class is the last attribute unless `class_index` says otherwise;
/// it must be nominal.
class ArffSource final : public StreamSource {
 public:
  explicit ArffSource(const std::filesystem::path& path, std::optional<std::size_t> class_index = std::nullopt);

  const StreamSchema& schema() const override { return *schema_; }
  std::optional<Instance> next() override;

 private:
  std::optional<StreamSchema> schema_;
  std::vector<AttributeInfo> columns_;
  std::size_t class_column_ = 0;
  std::ifstream in_;
  std::size_t line_ = 0;
  std::string buffer_;
};

/// Writes instances as one headerless CSV row each (class last).
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const StreamSchema& schema) : out_(out), schema_(schema) {}
  void write(const Instance& inst);

 private:
  std::ostream& out_;
  const StreamSchema& schema_;
};

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace goowe
