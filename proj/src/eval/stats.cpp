// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/eval/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "goowe/streams/readers.hpp"

namespace goowe {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
  }
  return out;
}

// Average ranks (1-based) of `v` in ascending order.
std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double mean = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) r[order[t]] = mean;
    i = j + 1;
  }
  return r;
}

}  // namespace

ResultMatrix ResultMatrix::read_csv(std::istream& in) {
  ResultMatrix m;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    auto fields = split_csv(line);
    if (m.algorithms.empty()) {
      if (fields.size() < 2) throw ParseError("matrix header needs a dataset column and algorithms", lineno);
      m.algorithms.assign(fields.begin() + 1, fields.end());
      continue;
    }
    if (fields.size() != m.algorithms.size() + 1)
      throw ParseError("ragged matrix row: expected " + std::to_string(m.algorithms.size() + 1) + " fields, got " +
                           std::to_string(fields.size()),
                       lineno);
    std::vector<double> row;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      const auto& f = fields[i];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v))
        throw ParseError("missing or non-numeric cell '" + f + "' for " + m.algorithms[i - 1], lineno);
      row.push_back(v);
    }
    m.datasets.push_back(fields[0]);
    m.values.push_back(std::move(row));
  }
  if (m.algorithms.empty()) throw ParseError("empty result matrix");
  return m;
}

ResultMatrix ResultMatrix::read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_csv(in);
}

void ResultMatrix::write_csv(std::ostream& out) const {
  out << "dataset";
  for (const auto& a : algorithms) out << ',' << a;
  out << '\n';
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    out << datasets[i];
    for (double v : values[i]) out << ',' << format_double(v);
    out << '\n';
  }
}

std::size_t ResultMatrix::column(const std::string& name) const {
  const auto it = std::find(algorithms.begin(), algorithms.end(), name);
  if (it == algorithms.end()) {
    std::string names;
    for (const auto& a : algorithms) names += (names.empty() ? "" : ", ") + a;
    throw ParseError("no column '" + name + "' (available: " + names + ")");
  }
  return static_cast<std::size_t>(it - algorithms.begin());
}

std::vector<double> ResultMatrix::column_values(std::size_t j) const {
  std::vector<double> out;
  for (const auto& row : values) out.push_back(row.at(j));
  return out;
}

std::vector<std::vector<double>> rank_rows(const ResultMatrix& m, bool higher_is_better) {
  std::vector<std::vector<double>> out;
  for (const auto& row : m.values) {
    if (row.size() != m.algorithms.size()) throw ParseError("ragged result matrix");
    std::vector<double> v = row;
    if (!higher_is_better)
      for (double& x : v) x = -x;
    out.push_back(average_ranks(v));
  }
  return out;
}

FriedmanResult friedman_from_ranks(std::span<const double> mean_ranks, std::size_t n) {
  FriedmanResult r;
  r.k = mean_ranks.size();
  r.n = n;
  if (r.k < 2 || n < 2) throw Error("Friedman test needs at least 2 algorithms and 2 datasets");
  r.mean_ranks.assign(mean_ranks.begin(), mean_ranks.end());
  const double k = static_cast<double>(r.k);
  const double N = static_cast<double>(n);
  double sum_sq = 0.0;
  for (double x : mean_ranks) sum_sq += x * x;
  r.chi_square = 12.0 * N / (k * (k + 1.0)) * (sum_sq - k * (k + 1.0) * (k + 1.0) / 4.0);
  r.df = r.k - 1;
  r.p_chi_square = boost::math::cdf(boost::math::complement(boost::math::chi_squared(k - 1.0), std::max(r.chi_square, 0.0)));
  r.df1 = r.k - 1;
  r.df2 = (r.k - 1) * (n - 1);
  const double denom = N * (k - 1.0) - r.chi_square;
  if (denom > 0.0) {
    r.f_statistic = (N - 1.0) * r.chi_square / denom;
    r.p_f = boost::math::cdf(boost::math::complement(
        boost::math::fisher_f(static_cast<double>(r.df1), static_cast<double>(r.df2)), std::max(r.f_statistic, 0.0)));
  } else {
    r.f_statistic = std::numeric_limits<double>::infinity();
    r.p_f = 0.0;
  }
  return r;
}

FriedmanResult friedman(const ResultMatrix& m, bool higher_is_better) {
  const auto ranks = rank_rows(m, higher_is_better);
  std::vector<double> mean(m.algorithms.size(), 0.0);
  for (const auto& row : ranks)
    for (std::size_t j = 0; j < row.size(); ++j) mean[j] += row[j];
  for (double& x : mean) x /= static_cast<double>(ranks.size());
  return friedman_from_ranks(mean, ranks.size());
}

double studentized_range_quantile(double alpha, std::size_t k) {
  if (k < 2) throw Error("studentized range needs k >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
  const boost::math::normal nd;
  const double kk = static_cast<double>(k);
  // P(range <= q) = k * integral phi(z) [Phi(z) - Phi(z - q)]^(k-1) dz
  auto cdf = [&](double q) {
    auto f = [&](double z) {
      const double inner = boost::math::cdf(nd, z) - boost::math::cdf(nd, z - q);
      return boost::math::pdf(nd, z) * std::pow(std::max(inner, 0.0), kk - 1.0);
    };
    return kk * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -12.0, 12.0 + q, 12, 1e-13);
  };
  double lo = 0.0, hi = 20.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < 1.0 - alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double nemenyi_cd(std::size_t k, std::size_t n, double alpha) {
  const double q = studentized_range_quantile(alpha, k) / std::sqrt(2.0);
  const double kk = static_cast<double>(k);
  return q * std::sqrt(kk * (kk + 1.0) / (6.0 * static_cast<double>(n)));
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("paired samples differ in length");
  WilcoxonResult r;
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0.0) {
      ++r.zeros;
    } else {
      diffs.push_back(d);
    }
  }
  if (diffs.empty()) throw Error("all paired differences are zero");
  r.n = diffs.size();
  std::vector<double> mags;
  for (double d : diffs) mags.push_back(std::abs(d));
  const auto ranks = average_ranks(mags);
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] > 0.0) {
      ++r.positive;
      r.w_plus += ranks[i];
    } else {
      ++r.negative;
      r.w_minus += ranks[i];
    }
  }
  const double n = static_cast<double>(r.n);
  if (r.n >= 10) {
    // Ties shrink the variance by sum (t^3 - t) / 48 over tie groups.
    std::vector<double> sorted = mags;
    std::sort(sorted.begin(), sorted.end());
    double tie = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      tie += t * t * t - t;
      i = j + 1;
    }
    const double mean = n * (n + 1.0) / 4.0;
    const double sd = std::sqrt(n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie / 48.0);
    const double dev = std::max(std::abs(r.w_plus - mean) - 0.5, 0.0);
    r.z = sd > 0.0 ? dev / sd : 0.0;
    r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(boost::math::normal(), r.z)));
    r.exact = false;
  } else {
    // Exact null distribution of W+ over doubled (integer) ranks.
    std::vector<int> doubled;
    int total = 0;
    for (double rk : ranks) {
      doubled.push_back(static_cast<int>(std::lround(2.0 * rk)));
      total += doubled.back();
    }
    std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
    count[0] = 1.0;
    for (int d : doubled)
      for (int s = total; s >= d; --s) count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - d)];
    const double all = std::pow(2.0, n);
    const int w = static_cast<int>(std::lround(2.0 * r.w_plus));
    double lower = 0.0, upper = 0.0;
    for (int s = 0; s <= total; ++s) {
      if (s <= w) lower += count[static_cast<std::size_t>(s)];
      if (s >= w) upper += count[static_cast<std::size_t>(s)];
    }
    r.p = std::min(1.0, 2.0 * std::min(lower, upper) / all);
    r.exact = true;
  }
  return r;
}

}  // namespace goowe
