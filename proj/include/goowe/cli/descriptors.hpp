// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/core/spec_string.hpp"
#include "goowe/streams/source.hpp"

namespace goowe {

/// Bad command line or descriptor (exit code 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Ensemble descriptors:
///   goowe:m=10,h=500,n=500,L=32m,learner=ht,grace=100,delta=0.01,tau=0.05,leaf=adaptive
///   base1:vote=<rule>,solve=window|chunk,...   (AUE2 add/drop, rule = mv|dwm(b,t)|awe|aue2|goowe)
///   base2:replace=<rule>,...                   (majority vote)
///   block:vote=<rule>,replace=<rule>,...
std::unique_ptr<StreamClassifier> make_ensemble(const SpecString& spec, const StreamSchema& schema);

std::vector<std::string> ensemble_kinds();

/// Stream construction with errors sorted into usage (1) and data (2) problems.
StreamPtr open_stream(const std::string& spec, std::uint64_t seed);

/// CSV-safe display name for a descriptor (commas become semicolons).
std::string display_name(const std::string& spec);

/// FNV-1a over the canonical form of a run, as 16 hex digits.
std::string config_hash(const std::string& ensemble, const std::string& stream, std::uint64_t seed,
                        std::uint64_t max_instances, std::uint64_t report_interval);

}  // namespace goowe
