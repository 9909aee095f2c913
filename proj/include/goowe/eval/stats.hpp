// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "goowe/core/types.hpp"

namespace goowe {

/// Datasets (rows) by algorithms (columns).
struct ResultMatrix {
  std::vector<std::string> algorithms;
  std::vector<std::string> datasets;
  std::vector<std::vector<double>> values;  // values[dataset][algorithm]

  /// Header `dataset,<alg>,...`, one row per dataset. Throws ParseError on
  /// ragged or non-numeric rows.
  static ResultMatrix read_csv(std::istream& in);
  static ResultMatrix read_csv(const std::filesystem::path& path);
  void write_csv(std::ostream& out) const;

  /// Column index of `name`; ParseError listing the columns otherwise.
  std::size_t column(const std::string& name) const;
  std::vector<double> column_values(std::size_t j) const;
};

/// Per-row ranks (1 = worst, k = best when higher_is_better), ties averaged.
std::vector<std::vector<double>> rank_rows(const ResultMatrix& m, bool higher_is_better = true);

struct FriedmanResult {
  std::size_t k = 0;  // algorithms
  std::size_t n = 0;  // datasets
  std::vector<double> mean_ranks;
  double chi_square = 0.0;
  double p_chi_square = 0.0;
  std::size_t df = 0;  // k - 1
  double f_statistic = 0.0;  // Iman-Davenport F_F
  double p_f = 0.0;
  std::size_t df1 = 0;  // k - 1
  std::size_t df2 = 0;  // (k - 1)(n - 1)
};

FriedmanResult friedman(const ResultMatrix& m, bool higher_is_better = true);

/// Friedman statistics from known mean ranks over n datasets.
FriedmanResult friedman_from_ranks(std::span<const double> mean_ranks, std::size_t n);

/// Upper alpha quantile of the studentized range of k standard normals
/// (infinite degrees of freedom).
double studentized_range_quantile(double alpha, std::size_t k);

/// Nemenyi critical difference q_alpha / sqrt(2) * sqrt(k (k + 1) / (6 n)).
double nemenyi_cd(std::size_t k, std::size_t n, double alpha = 0.05);

struct WilcoxonResult {
  std::size_t n = 0;          // non-zero differences
  std::size_t positive = 0;   // a > b
  std::size_t negative = 0;   // a < b
  std::size_t zeros = 0;
  double w_plus = 0.0;        // rank sum of positive differences
  double w_minus = 0.0;
  double z = 0.0;             // normal approximation only
  double p = 1.0;             // two-tailed
  bool exact = false;
};

/// Paired signed-rank test of a against b. Zero differences are dropped.
/// n >= 10: normal approximation with tie and continuity correction;
/// otherwise the exact null distribution. Throws when every difference is 0.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

}  // namespace goowe
