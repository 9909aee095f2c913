// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/learners/hoeffding_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "goowe/core/hash.hpp"

namespace goowe {

double hoeffding_bound(double range, double confidence, double n) {
  return std::sqrt(range * range * std::log(1.0 / confidence) / (2.0 * n));
}

namespace {

double entropy(std::span<const double> dist) {
  const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double v : dist)
    if (v > 0.0) h -= v / total * std::log2(v / total);
  return h;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::size_t argmax(std::span<const double> v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

double information_gain(std::span<const double> pre, std::span<const std::vector<double>> post,
                        double min_branch_fraction) {
  double total = 0.0;
  std::vector<double> weights;
  weights.reserve(post.size());
  for (const auto& b : post) {
    weights.push_back(std::accumulate(b.begin(), b.end(), 0.0));
    total += weights.back();
  }
  if (total <= 0.0) return -std::numeric_limits<double>::infinity();
  int big = 0;
  for (double w : weights)
    if (w / total > min_branch_fraction) ++big;
  if (big < 2) return -std::numeric_limits<double>::infinity();
  double h = 0.0;
  for (std::size_t b = 0; b < post.size(); ++b) h += weights[b] / total * entropy(post[b]);
  return entropy(pre) - h;
}

double HoeffdingTree::Leaf::seen() const {
  return std::accumulate(class_counts.begin(), class_counts.end(), 0.0);
}

HoeffdingTree::HoeffdingTree(const StreamSchema& schema, HoeffdingTreeParams params)
    : HoeffdingTree(std::make_shared<const AttributeLayout>(schema), params) {}

HoeffdingTree::HoeffdingTree(LayoutPtr layout, HoeffdingTreeParams params)
    : layout_(std::move(layout)), params_(params) {
  if (!(params_.split_confidence > 0.0 && params_.split_confidence < 1.0))
    throw SchemaError("split confidence must lie in (0, 1)");
  if (params_.grace_period <= 0.0) throw SchemaError("grace period must be positive");
  if (params_.numeric_split_points == 0) throw SchemaError("need at least one numeric split point");
  nodes_.emplace_back();
  nodes_[0].leaf = make_leaf(0, std::vector<std::uint8_t>(layout_->nominal.size(), 0));
  bytes_ = kTreeBytes + leaf_bytes(*nodes_[0].leaf);
}

std::unique_ptr<HoeffdingTree::Leaf> HoeffdingTree::make_leaf(std::size_t depth,
                                                              std::vector<std::uint8_t> used_nominal) {
  auto leaf = std::make_unique<Leaf>();
  leaf->class_counts.assign(layout_->classes, 0.0);
  leaf->nb = std::make_unique<NaiveBayesModel>(layout_);
  leaf->created = next_created_++;
  leaf->depth = depth;
  leaf->used_nominal = std::move(used_nominal);
  return leaf;
}

std::size_t HoeffdingTree::leaf_bytes(const Leaf& leaf) const {
  return kLeafBytes + 8 * layout_->classes + (leaf.nb ? leaf.nb->memory_bytes() : 0);
}

std::size_t HoeffdingTree::route(std::span<const double> x) const {
  std::size_t i = 0;
  while (!nodes_[i].leaf) {
    const Node& n = nodes_[i];
    const double v = x[n.attribute];
    if (n.nominal_split) {
      const auto b = static_cast<std::size_t>(v);
      i = n.children[std::min(b, n.children.size() - 1)];
    } else {
      i = n.children[v <= n.threshold ? 0 : 1];
    }
  }
  return i;
}

void HoeffdingTree::train_on(const Instance& inst) {
  if (inst.x.size() != layout_->attributes) throw SchemaError("instance width does not match schema");
  if (inst.label >= layout_->classes) throw SchemaError("label out of range");
  const double w = inst.weight;
  if (w <= 0.0) return;
  const std::size_t idx = route(inst.x);
  Leaf& leaf = *nodes_[idx].leaf;
  if (leaf.nb) {
    if (params_.leaf_prediction == LeafPrediction::kNaiveBayesAdaptive) {
      if (leaf.seen() > 0.0 && argmax(leaf.class_counts) == inst.label) leaf.mc_correct += w;
      if (!leaf.nb->empty()) {
        thread_local std::vector<double> buf;
        buf.resize(layout_->classes);
        leaf.nb->score(inst.x, buf);
        if (argmax(buf) == inst.label) leaf.nb_correct += w;
      }
    }
    const std::size_t before = leaf.nb->memory_bytes();
    leaf.nb->train(inst.x, inst.label, w);
    bytes_ += leaf.nb->memory_bytes() - before;
  }
  leaf.class_counts[inst.label] += w;
  trained_ += w;
  if (leaf.nb && leaf.depth < params_.max_depth &&
      leaf.nb->total_weight() - leaf.weight_at_last_attempt >= params_.grace_period)
    attempt_split(idx);
}

std::vector<HoeffdingTree::SplitCandidate> HoeffdingTree::candidates(const Leaf& leaf) const {
  const NaiveBayesModel& nb = *leaf.nb;
  const std::size_t p = layout_->classes;
  const auto pre = nb.class_counts();
  std::vector<SplitCandidate> out;

  for (std::size_t o = 0; o < layout_->numeric.size(); ++o) {
    std::vector<NaiveBayesModel::GaussianSummary> g(p);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < p; ++c) {
      g[c] = nb.numeric_summary(static_cast<ClassIndex>(c), o);
      if (g[c].weight > 0.0) {
        lo = std::min(lo, g[c].min);
        hi = std::max(hi, g[c].max);
      }
    }
    if (!(hi > lo)) continue;
    SplitCandidate best{-std::numeric_limits<double>::infinity(), layout_->numeric[o], false, 0.0, {}};
    const std::size_t points = params_.numeric_split_points;
    for (std::size_t i = 0; i < points; ++i) {
      const double t = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(points + 1);
      std::vector<std::vector<double>> branches(2, std::vector<double>(p, 0.0));
      for (std::size_t c = 0; c < p; ++c) {
        const auto& s = g[c];
        if (s.weight <= 0.0) continue;
        double left;
        if (t < s.min) {
          left = 0.0;
        } else if (t >= s.max) {
          left = s.weight;
        } else {
          left = s.weight * normal_cdf((t - s.mean) / std::sqrt(s.variance));
        }
        branches[0][c] = left;
        branches[1][c] = s.weight - left;
      }
      const double merit = information_gain(pre, branches, params_.min_branch_fraction);
      if (merit > best.merit) {
        best.merit = merit;
        best.threshold = t;
        best.branches = std::move(branches);
      }
    }
    if (std::isfinite(best.merit)) out.push_back(std::move(best));
  }

  for (std::size_t o = 0; o < layout_->nominal.size(); ++o) {
    if (leaf.used_nominal[o]) continue;
    const std::uint32_t card = layout_->cardinality[o];
    std::vector<std::vector<double>> branches(card, std::vector<double>(p, 0.0));
    for (std::uint32_t v = 0; v < card; ++v)
      for (std::size_t c = 0; c < p; ++c) branches[v][c] = nb.nominal_count(static_cast<ClassIndex>(c), o, v);
    const double merit = information_gain(pre, branches, params_.min_branch_fraction);
    if (std::isfinite(merit)) out.push_back({merit, layout_->nominal[o], true, 0.0, std::move(branches)});
  }
  return out;
}

void HoeffdingTree::attempt_split(std::size_t node_index) {
  ++split_attempts_;
  Leaf& leaf = *nodes_[node_index].leaf;
  const NaiveBayesModel& nb = *leaf.nb;
  leaf.weight_at_last_attempt = nb.total_weight();
  const auto pre = nb.class_counts();
  if (std::count_if(pre.begin(), pre.end(), [](double v) { return v > 0.0; }) < 2) return;

  auto cands = candidates(leaf);
  // The "do not split" option competes with merit 0.
  cands.push_back({0.0, SIZE_MAX, false, 0.0, {}});
  std::stable_sort(cands.begin(), cands.end(),
                   [](const SplitCandidate& a, const SplitCandidate& b) { return a.merit > b.merit; });
  const SplitCandidate& best = cands[0];
  if (best.attribute == SIZE_MAX || !(best.merit > 0.0)) return;
  const double second = cands[1].merit;
  const double range = std::log2(static_cast<double>(std::max<std::size_t>(layout_->classes, 2)));
  const double eps = hoeffding_bound(range, params_.split_confidence, nb.total_weight());
  if (!(best.merit - second > eps || eps < params_.tie_threshold)) return;

  // Children inherit the leaf's class counts, apportioned by the split's branch estimates.
  const std::size_t p = layout_->classes;
  const std::size_t nb_branches = best.branches.size();
  std::vector<double> branch_total(nb_branches, 0.0);
  double all = 0.0;
  for (std::size_t b = 0; b < nb_branches; ++b) {
    branch_total[b] = std::accumulate(best.branches[b].begin(), best.branches[b].end(), 0.0);
    all += branch_total[b];
  }
  std::vector<std::vector<double>> inherited(nb_branches, std::vector<double>(p, 0.0));
  for (std::size_t c = 0; c < p; ++c) {
    const double total_c = leaf.class_counts[c];
    if (total_c <= 0.0) continue;
    if (pre[c] > 0.0) {
      for (std::size_t b = 0; b < nb_branches; ++b) inherited[b][c] = total_c * best.branches[b][c] / pre[c];
    } else {
      for (std::size_t b = 0; b < nb_branches; ++b) inherited[b][c] = total_c * branch_total[b] / all;
    }
  }

  std::vector<std::uint8_t> used = leaf.used_nominal;
  if (best.nominal) {
    const auto pos = std::find(layout_->nominal.begin(), layout_->nominal.end(), best.attribute);
    used[static_cast<std::size_t>(pos - layout_->nominal.begin())] = 1;
  }
  const std::size_t depth = leaf.depth + 1;
  bytes_ -= leaf_bytes(leaf);
  bytes_ += kInternalBytes + 8 * nb_branches;

  std::vector<std::size_t> children;
  children.reserve(nb_branches);
  for (std::size_t b = 0; b < nb_branches; ++b) {
    Node child;
    child.parent = node_index;
    child.leaf = make_leaf(depth, used);
    child.leaf->class_counts = std::move(inherited[b]);
    bytes_ += leaf_bytes(*child.leaf);
    children.push_back(nodes_.size());
    nodes_.push_back(std::move(child));
  }
  Node& n = nodes_[node_index];
  n.attribute = best.attribute;
  n.nominal_split = best.nominal;
  n.threshold = best.threshold;
  n.children = std::move(children);
  n.leaf.reset();
}

void HoeffdingTree::leaf_scores(const Leaf& leaf, std::span<const double> x, std::span<double> out) const {
  const bool use_nb = leaf.nb && !leaf.nb->empty() &&
                      (params_.leaf_prediction == LeafPrediction::kNaiveBayes ||
                       (params_.leaf_prediction == LeafPrediction::kNaiveBayesAdaptive &&
                        leaf.nb_correct > leaf.mc_correct));
  if (use_nb) {
    leaf.nb->score(x, out);
    return;
  }
  std::copy(leaf.class_counts.begin(), leaf.class_counts.end(), out.begin());
}

void HoeffdingTree::score(std::span<const double> x, std::span<double> out) const {
  if (x.size() != layout_->attributes) throw SchemaError("instance width does not match schema");
  if (out.size() != layout_->classes) throw SchemaError("score buffer has the wrong length");
  leaf_scores(*nodes_[route(x)].leaf, x, out);
}

void HoeffdingTree::prune(std::size_t target_bytes) {
  if (bytes_ <= target_bytes) return;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].leaf && nodes_[i].leaf->nb) active.push_back(i);
  std::vector<double> seen(nodes_.size(), 0.0);
  for (std::size_t i : active) seen[i] = nodes_[i].leaf->seen();
  std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
    if (seen[a] != seen[b]) return seen[a] < seen[b];
    return nodes_[a].leaf->created < nodes_[b].leaf->created;
  });
  for (std::size_t i : active) {
    if (bytes_ <= target_bytes) break;
    Leaf& leaf = *nodes_[i].leaf;
    bytes_ -= leaf.nb->memory_bytes();
    leaf.nb.reset();
  }
}

std::size_t HoeffdingTree::recount_memory() const {
  std::size_t total = kTreeBytes;
  for (const Node& n : nodes_) total += n.leaf ? leaf_bytes(*n.leaf) : kInternalBytes + 8 * n.children.size();
  return total;
}

std::size_t HoeffdingTree::leaf_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.leaf != nullptr; }));
}

std::size_t HoeffdingTree::active_leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const Node& n) { return n.leaf && n.leaf->nb; }));
}

std::size_t HoeffdingTree::depth() const {
  std::size_t d = 0;
  for (const Node& n : nodes_)
    if (n.leaf) d = std::max(d, n.leaf->depth);
  return d;
}

std::vector<HoeffdingTree::LeafView> HoeffdingTree::leaves() const {
  std::vector<LeafView> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].leaf) continue;
    const Leaf& l = *nodes_[i].leaf;
    out.push_back({i, l.seen(), l.nb != nullptr, l.created, l.class_counts});
  }
  return out;
}

std::optional<std::size_t> HoeffdingTree::root_split_attribute() const {
  if (nodes_[0].leaf) return std::nullopt;
  return nodes_[0].attribute;
}

std::vector<std::size_t> HoeffdingTree::path_attributes(std::size_t leaf) const {
  std::vector<std::size_t> out;
  for (std::size_t i = nodes_.at(leaf).parent; i != SIZE_MAX; i = nodes_[i].parent) out.push_back(nodes_[i].attribute);
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t HoeffdingTree::fingerprint() const {
  Fnv1a h;
  for (const Node& n : nodes_) {
    h.add(static_cast<std::uint64_t>(n.leaf ? 1 : 0));
    if (n.leaf) {
      for (double c : n.leaf->class_counts) h.add(c);
      h.add(static_cast<std::uint64_t>(n.leaf->nb ? 1 : 0));
    } else {
      h.add(static_cast<std::uint64_t>(n.attribute));
      h.add(n.threshold);
      for (std::size_t c : n.children) h.add(static_cast<std::uint64_t>(c));
    }
  }
  return h.value();
}

}  // namespace goowe
