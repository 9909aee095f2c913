// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goowe/core/classifier.hpp"
#include "goowe/ensemble/component.hpp"

namespace goowe {

class EmptyChunkError : public Error {
 public:
  using Error::Error;
};

/// Unweighted vote: all ones. Throws for m = 0.
std::vector<double> mv_weights(std::size_t m);

struct DwmResult {
  std::vector<double> weights;
  std::vector<std::size_t> prune;  // indices whose weight fell below theta
};

/// Multiplies each wrong component's weight by beta, rescales so the largest
/// weight is 1, and flags weights below theta.
DwmResult dwm_update(std::span<const double> weights, std::span<const std::uint8_t> correct, double beta,
                     double theta);

/// Mean of (1 - normalized score of the true class)^2 over the chunk.
double mse_i(const IncrementalClassifier& component, std::span<const Instance> chunk);

/// Error of a classifier that predicts from the chunk's class prior:
/// sum_c P(c) (1 - P(c))^2.
double mse_r(std::span<const Instance> chunk, std::size_t classes);

/// MSE_r - MSE_i, floored at 0.
inline double awe_weight(double mse_r_value, double mse_i_value) {
  const double w = mse_r_value - mse_i_value;
  return w > 0.0 ? w : 0.0;
}

/// 1 / (MSE_r + MSE_i + eps).
inline double aue2_weight(double mse_r_value, double mse_i_value, double eps) {
  return 1.0 / (mse_r_value + mse_i_value + eps);
}

inline constexpr double kAue2Epsilon = 1e-9;

std::vector<double> awe_weights(std::span<const Component> components, std::span<const Instance> chunk);
std::vector<double> aue2_weights(std::span<const Component> components, std::span<const Instance> chunk,
                                 double eps = kAue2Epsilon);

enum class RuleKind { kMajority, kDwm, kAwe, kAue2, kGoowe };

struct RuleSpec {
  RuleKind kind = RuleKind::kMajority;
  double beta = 0.5;    // dwm
  double theta = 0.01;  // dwm
};

/// Parses `mv | dwm | dwm(beta,theta) | awe | aue2 | goowe`.
RuleSpec parse_rule(std::string_view text);
std::string rule_name(const RuleSpec& rule);

}  // namespace goowe
