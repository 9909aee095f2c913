// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/learners/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "goowe/simd/kernels.hpp"

namespace goowe {

AttributeLayout::AttributeLayout(const StreamSchema& schema)
    : classes(schema.class_count()), attributes(schema.attribute_count()) {
  numeric.assign(schema.numeric_indices().begin(), schema.numeric_indices().end());
  nominal.assign(schema.nominal_indices().begin(), schema.nominal_indices().end());
  for (std::size_t pos : nominal) {
    value_offset.push_back(nominal_values);
    cardinality.push_back(schema.attribute(pos).cardinality());
    nominal_values += schema.attribute(pos).cardinality();
  }
  all_numeric = nominal.empty();
}

NaiveBayesModel::NaiveBayesModel(LayoutPtr layout)
    : layout_(std::move(layout)), class_counts_(layout_->classes, 0.0), stats_(layout_->classes) {}

NaiveBayesModel::ClassStats& NaiveBayesModel::stats_for(ClassIndex c) {
  auto& slot = stats_[c];
  if (!slot) {
    const std::size_t q = layout_->numeric.size();
    slot = std::make_unique<ClassStats>();
    slot->mean.assign(q, 0.0);
    slot->m2.assign(q, 0.0);
    slot->inv_var.assign(q, 1.0 / kVarianceFloor);
    slot->log_var.assign(q, std::log(kVarianceFloor));
    slot->min.assign(q, std::numeric_limits<double>::infinity());
    slot->max.assign(q, -std::numeric_limits<double>::infinity());
    slot->counts.assign(layout_->nominal_values, 0.0);
    slot->log_num.assign(layout_->nominal_values, 0.0);
    ++classes_with_stats_;
  }
  return *slot;
}

namespace {

// Numeric attributes gathered into a contiguous buffer.
std::span<const double> gather_numeric(const AttributeLayout& layout, std::span<const double> x,
                                       std::vector<double>& buffer) {
  if (layout.all_numeric) return x;
  buffer.resize(layout.numeric.size());
  for (std::size_t i = 0; i < layout.numeric.size(); ++i) buffer[i] = x[layout.numeric[i]];
  return buffer;
}

}  // namespace

void NaiveBayesModel::train(std::span<const double> x, ClassIndex label, double weight) {
  if (x.size() != layout_->attributes) throw SchemaError("instance width does not match schema");
  if (label >= layout_->classes) throw SchemaError("label out of range");
  for (std::size_t o = 0; o < layout_->nominal.size(); ++o) {
    const double v = x[layout_->nominal[o]];
    if (!(v >= 0.0) || v >= layout_->cardinality[o]) throw SchemaError("nominal value out of range");
  }
  if (weight <= 0.0) return;
  ClassStats& s = stats_for(label);
  const double before = class_counts_[label];
  const double after = before + weight;
  class_counts_[label] = after;
  total_ += weight;

  thread_local std::vector<double> buffer;
  const auto xs = gather_numeric(*layout_, x, buffer);
  const std::size_t q = xs.size();
  if (q > 0) {
    simd::kernels().welford_update(xs.data(), s.mean.data(), s.m2.data(), weight, after, q);
    const double dof = after - 1.0;
    for (std::size_t i = 0; i < q; ++i) {
      s.min[i] = std::min(s.min[i], xs[i]);
      s.max[i] = std::max(s.max[i], xs[i]);
      const double var = dof > 0.0 ? std::max(s.m2[i] / dof, kVarianceFloor) : kVarianceFloor;
      s.inv_var[i] = 1.0 / var;
      s.log_var[i] = std::log(var);
    }
  }
  if (!layout_->nominal.empty()) {
    double den = 0.0;
    for (std::size_t o = 0; o < layout_->nominal.size(); ++o) {
      const auto v = static_cast<std::size_t>(x[layout_->nominal[o]]);
      const std::size_t slot = layout_->value_offset[o] + v;
      s.counts[slot] += weight;
      s.log_num[slot] = std::log(s.counts[slot] + 1.0);
      den += std::log(after + layout_->cardinality[o]);
    }
    s.log_den = den;
  }
}

void NaiveBayesModel::score(std::span<const double> x, std::span<double> out) const {
  const std::size_t p = layout_->classes;
  if (out.size() != p) throw SchemaError("score buffer has the wrong length");
  if (x.size() != layout_->attributes) throw SchemaError("instance width does not match schema");
  std::fill(out.begin(), out.end(), 0.0);
  if (total_ == 0.0) return;

  thread_local std::vector<double> buffer;
  const auto xs = gather_numeric(*layout_, x, buffer);
  const auto& k = simd::kernels();
  const double log_total = std::log(total_);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < p; ++c) {
    if (class_counts_[c] <= 0.0) continue;
    const ClassStats& s = *stats_[c];
    double lj = std::log(class_counts_[c]) - log_total;
    if (!xs.empty())
      lj -= 0.5 * k.gaussian_terms(xs.data(), s.mean.data(), s.inv_var.data(), s.log_var.data(), xs.size());
    if (!layout_->nominal.empty()) {
      for (std::size_t o = 0; o < layout_->nominal.size(); ++o) {
        const auto v = static_cast<std::size_t>(x[layout_->nominal[o]]);
        lj += s.log_num[layout_->value_offset[o] + v];
      }
      lj -= s.log_den;
    }
    out[c] = lj;
    best = std::max(best, lj);
  }
  for (std::size_t c = 0; c < p; ++c)
    out[c] = class_counts_[c] > 0.0 ? std::exp(out[c] - best) : 0.0;
}

NaiveBayesModel::GaussianSummary NaiveBayesModel::numeric_summary(ClassIndex c, std::size_t ord) const {
  GaussianSummary g;
  if (c >= stats_.size() || !stats_[c]) return g;
  const ClassStats& s = *stats_[c];
  g.weight = class_counts_[c];
  g.mean = s.mean[ord];
  g.variance = 1.0 / s.inv_var[ord];
  g.min = s.min[ord];
  g.max = s.max[ord];
  return g;
}

double NaiveBayesModel::nominal_count(ClassIndex c, std::size_t ord, std::uint32_t value) const {
  if (c >= stats_.size() || !stats_[c]) return 0.0;
  return stats_[c]->counts[layout_->value_offset[ord] + value];
}

std::size_t NaiveBayesModel::memory_bytes() const noexcept {
  const std::size_t per_class =
      kClassStatsBytes + 48 * layout_->numeric.size() + 16 * layout_->nominal_values;
  return kBaseBytes + 8 * layout_->classes + classes_with_stats_ * per_class;
}

NaiveBayesClassifier::NaiveBayesClassifier(const StreamSchema& schema)
    : model_(std::make_shared<const AttributeLayout>(schema)) {}

NaiveBayesClassifier::NaiveBayesClassifier(LayoutPtr layout) : model_(std::move(layout)) {}

void NaiveBayesClassifier::train_on(const Instance& inst) { model_.train(inst.x, inst.label, inst.weight); }

void NaiveBayesClassifier::score(std::span<const double> x, std::span<double> out) const {
  model_.score(x, out);
}

}  // namespace goowe
