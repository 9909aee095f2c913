// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace goowe {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitPartial = 3 };

/// Parses and dispatches `generate | run | compare | stats`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Default output directory: $GOOWE_OUTPUT_DIR, else "goowe-out".
std::filesystem::path default_output_dir();

struct SuiteEntry {
  std::string name;  // matrix label
  std::string spec;  // descriptor
};

struct SuiteSpec {
  std::vector<SuiteEntry> ensembles;
  std::vector<SuiteEntry> streams;
  std::vector<std::uint64_t> seeds{1};
  std::uint64_t max_instances = 10000;
  std::uint64_t report_interval = 500;
};

/// Reads a suite descriptor:
///   {"ensembles": ["goowe", {"name": "B1-MV", "spec": "base1:vote=mv"}],
///    "streams": ["sea:noise=0.1"], "seeds": [1, 2],
///    "max_instances": 10000, "report_interval": 500}
SuiteSpec read_suite(const std::filesystem::path& path);

struct SuiteOutcome {
  std::size_t runs = 0;
  std::size_t executed = 0;  // runs not satisfied from a previous result
  std::size_t failed = 0;
};

/// Runs every ensemble x stream x seed cell on `threads` workers and writes
/// runs/, accuracy.csv, memory.csv, timing.csv and suite.json into `out_dir`.
SuiteOutcome run_suite(const SuiteSpec& suite, const std::filesystem::path& out_dir, std::size_t threads,
                       bool resume, std::ostream& log);

}  // namespace goowe
