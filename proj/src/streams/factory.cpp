// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/streams/factory.hpp"

#include "goowe/core/rng.hpp"
#include "goowe/streams/drift.hpp"
#include "goowe/streams/generators.hpp"
#include "goowe/streams/readers.hpp"

namespace goowe {

namespace {

StreamPtr sequence_or_single(std::vector<StreamPtr> concepts, const SpecString& s, Rng& root) {
  const double period = s.get_double("period", 0.0);
  if (period <= 0.0 || concepts.size() == 1) return std::move(concepts.front());
  return std::make_unique<ConceptDriftSequence>(std::move(concepts), period, s.get_double("width", 0.0),
                                                root.next_u64());
}

std::size_t concept_count(const SpecString& s, std::size_t fallback) {
  const auto n = static_cast<std::size_t>(s.get_uint("concepts", fallback));
  if (n == 0) throw ParseError("concepts must be positive");
  return s.get_double("period", 0.0) > 0.0 ? n : 1;
}

}  // namespace

std::vector<std::string> stream_kinds() {
  return {"rbf", "rbf_abrupt", "sea", "hyperplane", "tree", "led", "noise", "csv", "arff"};
}

StreamPtr make_stream(std::string_view spec, std::uint64_t seed) { return make_stream(SpecString::parse(spec), seed); }

StreamPtr make_stream(const SpecString& s, std::uint64_t seed) {
  Rng root(seed);
  const std::string& kind = s.name;
  try {
    if (kind == "rbf") {
      s.require_known({"classes", "attributes", "centroids", "speed", "interval", "blips"});
      RbfParams p;
      p.classes = s.get_uint("classes", 2);
      p.attributes = s.get_uint("attributes", 10);
      p.centroids = s.get_uint("centroids", 50);
      p.drift_speed = s.get_double("speed", 0.0);
      p.drift_interval = s.get_uint("interval", 500);
      p.blip_rate = s.get_double("blips", 0.0);
      const std::uint64_t model = root.next_u64();
      return std::make_unique<RbfGenerator>(p, model, root.next_u64());
    }
    if (kind == "rbf_abrupt") {
      s.require_known({"classes", "attributes", "centroids", "concepts", "period", "width"});
      RbfParams p;
      p.classes = s.get_uint("classes", 2);
      p.attributes = s.get_uint("attributes", 10);
      p.centroids = s.get_uint("centroids", 50);
      std::vector<StreamPtr> concepts;
      for (std::size_t k = 0, n = concept_count(s, 10); k < n; ++k) {
        const std::uint64_t model = root.next_u64();
        concepts.push_back(std::make_unique<RbfGenerator>(p, model, root.next_u64()));
      }
      return sequence_or_single(std::move(concepts), s, root);
    }
    if (kind == "sea") {
      s.require_known({"noise", "function", "concepts", "period", "width"});
      const double noise = s.get_double("noise", 0.1);
      const std::size_t first = s.get_uint("function", 0);
      std::vector<StreamPtr> concepts;
      for (std::size_t k = 0, n = concept_count(s, 4); k < n; ++k)
        concepts.push_back(std::make_unique<SeaGenerator>(SeaParams{(first + k) % 4, noise}, root.next_u64()));
      return sequence_or_single(std::move(concepts), s, root);
    }
    if (kind == "hyperplane") {
      s.require_known({"attributes", "magnitude", "noise", "reverse"});
      HyperplaneParams p;
      p.attributes = s.get_uint("attributes", 10);
      p.magnitude = s.get_double("magnitude", 0.001);
      p.noise = s.get_double("noise", 0.05);
      p.reverse_probability = s.get_double("reverse", 0.1);
      return std::make_unique<HyperplaneGenerator>(p, root.next_u64());
    }
    if (kind == "tree") {
      s.require_known({"classes", "concepts", "period", "width"});
      RandomTreeParams p;
      p.classes = s.get_uint("classes", 2);
      const std::uint64_t tree_a = root.next_u64();
      const std::uint64_t tree_b = root.next_u64();
      std::vector<StreamPtr> concepts;
      for (std::size_t k = 0, n = concept_count(s, 4); k < n; ++k)
        concepts.push_back(std::make_unique<RandomTreeGenerator>(p, k % 2 == 0 ? tree_a : tree_b, root.next_u64()));
      return sequence_or_single(std::move(concepts), s, root);
    }
    if (kind == "led") {
      s.require_known({"noise", "drift", "concepts", "period", "width"});
      const double noise = s.get_double("noise", 0.1);
      const std::size_t drift = s.get_uint("drift", 0);
      std::vector<StreamPtr> concepts;
      for (std::size_t k = 0, n = concept_count(s, 4); k < n; ++k)
        concepts.push_back(std::make_unique<LedGenerator>(LedParams{noise, k % 2 == 0 ? 0 : drift}, root.next_u64()));
      return sequence_or_single(std::move(concepts), s, root);
    }
    if (kind == "noise") {
      s.require_known({"attributes", "classes"});
      return std::make_unique<NoiseGenerator>(s.get_uint("attributes", 5), s.get_uint("classes", 2), root.next_u64());
    }
    if (kind == "csv") {
      s.require_known({"path"});
      if (!s.has("path")) throw ParseError("csv stream needs path=...");
      return std::make_unique<CsvSource>(s.get("path", ""));
    }
    if (kind == "arff") {
      s.require_known({"path", "class_index"});
      if (!s.has("path")) throw ParseError("arff stream needs path=...");
      std::optional<std::size_t> ci;
      if (s.has("class_index")) ci = s.get_uint("class_index", 0);
      return std::make_unique<ArffSource>(s.get("path", ""), ci);
    }
  } catch (const SchemaError& e) {
    throw ParseError("invalid " + kind + " stream: " + e.what());
  }
  std::string names;
  for (const auto& k : stream_kinds()) names += (names.empty() ? "" : ", ") + k;
  throw ParseError("unknown stream '" + kind + "' (valid: " + names + ")");
}

}  // namespace goowe
