// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "goowe/core/types.hpp"

namespace goowe {

/// Pull-based instance stream. Generators never end; file readers end at EOF.
class StreamSource {
 public:
  virtual ~StreamSource() = default;
  virtual const StreamSchema& schema() const = 0;
  virtual std::optional<Instance> next() = 0;
};

using StreamPtr = std::unique_ptr<StreamSource>;

/// Replays a fixed list of instances.
class VectorSource final : public StreamSource {
 public:
  VectorSource(StreamSchema schema, std::vector<Instance> instances)
      : schema_(std::move(schema)), instances_(std::move(instances)) {}
  const StreamSchema& schema() const override { return schema_; }
  std::optional<Instance> next() override {
    if (pos_ >= instances_.size()) return std::nullopt;
    return instances_[pos_++];
  }

 private:
  StreamSchema schema_;
  std::vector<Instance> instances_;
  std::size_t pos_ = 0;
};

}  // namespace goowe
