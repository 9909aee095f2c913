// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "goowe/core/spec_string.hpp"
#include "goowe/streams/source.hpp"

namespace goowe {

/// Builds a stream from a descriptor such as `sea:noise=0.1,period=25000`.
///
///   rbf         classes, attributes, centroids, speed, interval, blips
///   rbf_abrupt  classes, attributes, centroids, concepts, period, width
///   sea         noise, function, concepts, period, width
///   hyperplane  attributes, magnitude, noise, reverse
///   tree        classes, concepts, period, width
///   led         noise, drift, concepts, period, width
///   noise       attributes, classes
///   csv         path
///   arff        path, class_index
///
/// Generators are seeded by `seed`; file readers ignore it.
StreamPtr make_stream(const SpecString& spec, std::uint64_t seed);
StreamPtr make_stream(std::string_view spec, std::uint64_t seed);

std::vector<std::string> stream_kinds();

}  // namespace goowe
