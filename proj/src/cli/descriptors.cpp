// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/cli/descriptors.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "goowe/baselines/scaffold.hpp"
#include "goowe/core/hash.hpp"
#include "goowe/ensemble/goowe_ensemble.hpp"
#include "goowe/learners/factory.hpp"
#include "goowe/streams/factory.hpp"

namespace goowe {

namespace {

constexpr std::string_view kFormatVersion = "goowe-run/1";

LearnerSpec learner_from(const SpecString& s) {
  LearnerSpec l;
  const std::string kind = s.get("learner", "ht");
  if (kind == "ht") {
    l.kind = LearnerKind::kHoeffdingTree;
  } else if (kind == "nb") {
    l.kind = LearnerKind::kNaiveBayes;
  } else {
    throw UsageError("unknown learner '" + kind + "' (valid: ht, nb)");
  }
  l.tree.grace_period = s.get_double("grace", l.tree.grace_period);
  l.tree.split_confidence = s.get_double("delta", l.tree.split_confidence);
  l.tree.tie_threshold = s.get_double("tau", l.tree.tie_threshold);
  const std::string leaf = s.get("leaf", "adaptive");
  if (leaf == "adaptive") {
    l.tree.leaf_prediction = LeafPrediction::kNaiveBayesAdaptive;
  } else if (leaf == "nb") {
    l.tree.leaf_prediction = LeafPrediction::kNaiveBayes;
  } else if (leaf == "mc") {
    l.tree.leaf_prediction = LeafPrediction::kMajorityClass;
  } else {
    throw UsageError("unknown leaf prediction '" + leaf + "' (valid: adaptive, nb, mc)");
  }
  return l;
}

constexpr std::array<std::string_view, 9> kCommonKeys = {"m", "h", "n", "L", "learner", "grace", "delta",
                                                       "tau", "leaf"};

void require_keys(const SpecString& s, std::initializer_list<std::string_view> extra) {
  std::vector<std::string_view> all(kCommonKeys.begin(), kCommonKeys.end());
  all.insert(all.end(), extra.begin(), extra.end());
  for (const auto& [k, v] : s.params) {
    if (std::find(all.begin(), all.end(), k) == all.end()) {
      std::string names;
      for (auto a : all) names += (names.empty() ? "" : ", ") + std::string(a);
      throw UsageError("unknown parameter '" + k + "' for " + s.name + " (valid: " + names + ")");
    }
  }
}

template <typename Config>
void common_sizes(const SpecString& s, Config& c) {
  c.max_components = s.get_uint("m", c.max_components);
  c.chunk_size = s.get_uint("h", c.chunk_size);
  c.window_size = s.get_uint("n", c.window_size);
  c.memory_limit = s.get_bytes("L", c.memory_limit);
}

RuleSpec rule_from(const std::string& text) {
  try {
    return parse_rule(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

std::vector<std::string> ensemble_kinds() { return {"goowe", "base1", "base2", "block"}; }

std::unique_ptr<StreamClassifier> make_ensemble(const SpecString& s, const StreamSchema& schema) {
  try {
    if (s.name == "goowe") {
      require_keys(s, {});
      GooweConfig c;
      common_sizes(s, c);
      return std::make_unique<GooweEnsemble>(schema, c, make_learner_factory(learner_from(s), schema));
    }
    if (s.name == "base1" || s.name == "base2" || s.name == "block") {
      require_keys(s, {"vote", "replace", "solve", "name"});
      ScaffoldConfig c;
      if (s.name == "base1") {
        if (s.has("replace")) throw UsageError("base1 fixes the replacement rule to aue2");
        c = ScaffoldConfig::base1(rule_from(s.get("vote", "mv")));
      } else if (s.name == "base2") {
        if (s.has("vote")) throw UsageError("base2 fixes the vote rule to mv");
        c = ScaffoldConfig::base2(rule_from(s.get("replace", "aue2")));
      } else {
        c.vote = rule_from(s.get("vote", "mv"));
        c.replacement = rule_from(s.get("replace", "aue2"));
        c.label = "block:" + rule_name(c.vote) + "/" + rule_name(c.replacement);
      }
      common_sizes(s, c);
      const std::string solve = s.get("solve", "window");
      if (solve == "window") {
        c.goowe_source = GooweSolveSource::kWindow;
      } else if (solve == "chunk") {
        c.goowe_source = GooweSolveSource::kChunk;
      } else {
        throw UsageError("solve must be window or chunk");
      }
      if (s.has("name")) c.label = s.get("name", "");
      return std::make_unique<BlockEnsembleScaffold>(schema, c, make_learner_factory(learner_from(s), schema));
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const SchemaError& e) {
    throw UsageError(std::string("invalid ensemble: ") + e.what());
  }
  std::string names;
  for (const auto& k : ensemble_kinds()) names += (names.empty() ? "" : ", ") + k;
  throw UsageError("unknown ensemble '" + s.name + "' (valid: " + names + ")");
}

StreamPtr open_stream(const std::string& spec, std::uint64_t seed) {
  SpecString s;
  try {
    s = SpecString::parse(spec);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (s.name == "csv" || s.name == "arff") return make_stream(s, seed);  // file problems are data errors
  try {
    return make_stream(s, seed);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

std::string display_name(const std::string& spec) {
  std::string out = spec;
  for (char& c : out)
    if (c == ',') c = ';';
  return out;
}

std::string config_hash(const std::string& ensemble, const std::string& stream, std::uint64_t seed,
                        std::uint64_t max_instances, std::uint64_t report_interval) {
  Fnv1a h;
  h.add(kFormatVersion);
  h.add(ensemble);
  h.add(stream);
  h.add(seed);
  h.add(max_instances);
  h.add(report_interval);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h.value()));
  return buf;
}

}  // namespace goowe
