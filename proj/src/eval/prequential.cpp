// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/eval/prequential.hpp"

#include <chrono>

#include "goowe/streams/readers.hpp"

namespace goowe {

double RunTrace::mean_cs_per_1k() const noexcept {
  if (records.empty()) return 0.0;
  double s = 0.0;
  for (const auto& r : records) s += r.cs_per_1k;
  return s / static_cast<double>(records.size());
}

double RunTrace::mean_memory_mb() const noexcept {
  if (records.empty()) return 0.0;
  double s = 0.0;
  for (const auto& r : records) s += r.memory_mb;
  return s / static_cast<double>(records.size());
}

RunTrace test_then_train(StreamClassifier& ensemble, StreamSource& stream, const EvalOptions& options) {
  if (options.report_interval == 0) throw SchemaError("report interval must be positive");
  using clock = std::chrono::steady_clock;
  RunTrace trace;
  trace.ensemble = std::string(ensemble.name());
  const std::size_t p = stream.schema().class_count();
  const auto run_start = clock::now();
  auto interval_start = run_start;
  std::size_t interval_n = 0;
  std::size_t interval_correct = 0;

  auto flush = [&] {
    const auto now = clock::now();
    const double seconds = std::chrono::duration<double>(now - interval_start).count();
    TraceRecord r;
    r.index = trace.records.size();
    r.instances = trace.instances;
    r.accuracy = 100.0 * static_cast<double>(interval_correct) / static_cast<double>(interval_n);
    r.cumulative_accuracy = trace.accuracy();
    r.cs_per_1k = seconds * 100.0 * 1000.0 / static_cast<double>(interval_n);
    r.memory_mb = bytes_to_mb(ensemble.memory_bytes());
    trace.records.push_back(r);
    interval_start = now;
    interval_n = 0;
    interval_correct = 0;
  };

  while (options.max_instances == 0 || trace.instances < options.max_instances) {
    auto inst = stream.next();
    if (!inst) break;
    if (inst->label >= p) throw SchemaError("stream label outside the declared classes");
    const ScoreVector prediction = ensemble.predict(inst->x);
    const bool hit = prediction.argmax() == inst->label;
    ensemble.learn(*inst);
    ++trace.instances;
    ++interval_n;
    if (hit) {
      ++trace.correct;
      ++interval_correct;
    }
    if (interval_n == options.report_interval) flush();
  }
  if (trace.instances == 0) throw Error("stream produced no instances");
  if (interval_n > 0) flush();
  trace.wall_seconds = std::chrono::duration<double>(clock::now() - run_start).count();
  return trace;
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  out << "interval,instances,accuracy,cumulative_accuracy,memory_mb\n";
  for (const auto& r : trace.records)
    out << r.index << ',' << r.instances << ',' << format_double(r.accuracy) << ','
        << format_double(r.cumulative_accuracy) << ',' << format_double(r.memory_mb) << '\n';
}

void write_timing_csv(std::ostream& out, const RunTrace& trace) {
  out << "interval,instances,cs_per_1k\n";
  for (const auto& r : trace.records) out << r.index << ',' << r.instances << ',' << format_double(r.cs_per_1k) << '\n';
}

}  // namespace goowe
