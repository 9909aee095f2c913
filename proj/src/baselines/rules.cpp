// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/baselines/rules.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace goowe {

std::vector<double> mv_weights(std::size_t m) {
  if (m == 0) throw Error("majority vote needs at least one component");
  return std::vector<double>(m, 1.0);
}

DwmResult dwm_update(std::span<const double> weights, std::span<const std::uint8_t> correct, double beta,
                     double theta) {
  if (weights.size() != correct.size()) throw ConsistencyError("weight and outcome counts differ");
  if (!(beta >= 0.0 && beta <= 1.0)) throw SchemaError("dwm beta must lie in [0, 1]");
  DwmResult r;
  r.weights.assign(weights.begin(), weights.end());
  for (std::size_t j = 0; j < r.weights.size(); ++j)
    if (!correct[j]) r.weights[j] *= beta;
  const double top = r.weights.empty() ? 0.0 : *std::max_element(r.weights.begin(), r.weights.end());
  if (top > 0.0)
    for (double& w : r.weights) w /= top;
  for (std::size_t j = 0; j < r.weights.size(); ++j)
    if (r.weights[j] < theta) r.prune.push_back(j);
  return r;
}

double mse_i(const IncrementalClassifier& component, std::span<const Instance> chunk) {
  if (chunk.empty()) throw EmptyChunkError("mse_i of an empty chunk");
  double sum = 0.0;
  for (const Instance& inst : chunk) {
    const ScoreVector s = component.normalized_score(inst.x);
    const double e = 1.0 - s[inst.label];
    sum += e * e;
  }
  return sum / static_cast<double>(chunk.size());
}

double mse_r(std::span<const Instance> chunk, std::size_t classes) {
  if (chunk.empty()) throw EmptyChunkError("mse_r of an empty chunk");
  std::vector<double> counts(classes, 0.0);
  for (const Instance& inst : chunk) {
    if (inst.label >= classes) throw SchemaError("label out of range");
    counts[inst.label] += 1.0;
  }
  const double n = static_cast<double>(chunk.size());
  double r = 0.0;
  for (double c : counts) {
    const double pc = c / n;
    r += pc * (1.0 - pc) * (1.0 - pc);
  }
  return r;
}

std::vector<double> awe_weights(std::span<const Component> components, std::span<const Instance> chunk) {
  if (chunk.empty()) throw EmptyChunkError("awe weights of an empty chunk");
  const double r = mse_r(chunk, components.empty() ? 0 : components.front().model->class_count());
  std::vector<double> w;
  for (const auto& c : components) w.push_back(awe_weight(r, mse_i(*c.model, chunk)));
  return w;
}

std::vector<double> aue2_weights(std::span<const Component> components, std::span<const Instance> chunk,
                                 double eps) {
  if (chunk.empty()) throw EmptyChunkError("aue2 weights of an empty chunk");
  if (!(eps > 0.0)) throw SchemaError("aue2 epsilon must be positive");
  const double r = mse_r(chunk, components.empty() ? 0 : components.front().model->class_count());
  std::vector<double> w;
  for (const auto& c : components) w.push_back(aue2_weight(r, mse_i(*c.model, chunk), eps));
  return w;
}

namespace {

double parse_double(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid number '" + std::string(s) + "' for " + std::string(what));
  return v;
}

}  // namespace

RuleSpec parse_rule(std::string_view text) {
  RuleSpec r;
  const auto open = text.find('(');
  const std::string_view head = text.substr(0, open);
  if (head == "mv") {
    r.kind = RuleKind::kMajority;
  } else if (head == "dwm") {
    r.kind = RuleKind::kDwm;
  } else if (head == "awe") {
    r.kind = RuleKind::kAwe;
  } else if (head == "aue2") {
    r.kind = RuleKind::kAue2;
  } else if (head == "goowe") {
    r.kind = RuleKind::kGoowe;
  } else {
    throw ParseError("unknown weighting rule '" + std::string(text) + "' (valid: mv, dwm(beta,theta), awe, aue2, goowe)");
  }
  if (open == std::string_view::npos) return r;
  if (r.kind != RuleKind::kDwm || text.back() != ')')
    throw ParseError("malformed weighting rule '" + std::string(text) + "'");
  const std::string_view args = text.substr(open + 1, text.size() - open - 2);
  const auto comma = args.find(',');
  r.beta = parse_double(args.substr(0, comma), "dwm beta");
  if (comma != std::string_view::npos) r.theta = parse_double(args.substr(comma + 1), "dwm theta");
  if (!(r.beta >= 0.0 && r.beta <= 1.0)) throw ParseError("dwm beta must lie in [0, 1]");
  return r;
}

std::string rule_name(const RuleSpec& rule) {
  switch (rule.kind) {
    case RuleKind::kMajority: return "mv";
    case RuleKind::kDwm: {
      char buf[64];
      auto* end = std::to_chars(buf, buf + 32, rule.beta).ptr;
      *end++ = ',';
      end = std::to_chars(end, buf + 64, rule.theta).ptr;
      return "dwm(" + std::string(buf, end) + ")";
    }
    case RuleKind::kAwe: return "awe";
    case RuleKind::kAue2: return "aue2";
    case RuleKind::kGoowe: return "goowe";
  }
  return "unknown";
}

}  // namespace goowe
