// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/streams/source.hpp"

namespace goowe {

/// One report interval of a prequential run.
struct TraceRecord {
  std::size_t index = 0;         // 0-based interval number
  std::size_t instances = 0;     // instances tested so far, including this interval
  double accuracy = 0.0;         // % correct within the interval
  double cumulative_accuracy = 0.0;  // % correct so far
  double cs_per_1k = 0.0;        // wall time, centiseconds per 1,000 instances
  double memory_mb = 0.0;        // model-size estimate at the end of the interval
};

struct RunTrace {
  std::string ensemble;
  std::string stream;
  std::uint64_t seed = 0;
  std::vector<TraceRecord> records;
  std::size_t instances = 0;
  std::size_t correct = 0;
  double wall_seconds = 0.0;

  /// correct / instances, in percent.
  double accuracy() const noexcept {
    return instances == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(instances);
  }
  double mean_cs_per_1k() const noexcept;
  double mean_memory_mb() const noexcept;
};

struct EvalOptions {
  std::size_t report_interval = 500;
  std::size_t max_instances = 0;  // 0: until the stream ends
};

/// Interleaved test-then-train: each instance is first predicted from its
/// features alone, then handed over with its label for training.
RunTrace test_then_train(StreamClassifier& ensemble, StreamSource& stream, const EvalOptions& options);

inline double bytes_to_mb(std::size_t bytes) { return static_cast<double>(bytes) / (1024.0 * 1024.0); }

/// interval,instances,accuracy,cumulative_accuracy,memory_mb (deterministic).
void write_trace_csv(std::ostream& out, const RunTrace& trace);
/// interval,instances,cs_per_1k (wall-clock; not reproducible).
void write_timing_csv(std::ostream& out, const RunTrace& trace);

}  // namespace goowe
