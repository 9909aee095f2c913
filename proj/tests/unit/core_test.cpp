// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "goowe/core/spec_string.hpp"
#include "goowe/core/types.hpp"
#include "goowe/core/window.hpp"
#include "test_util.hpp"

namespace goowe {
namespace {

TEST(NormalizeScores, Examples) {
  const double a[] = {2.0, 2.0};
  EXPECT_EQ(normalize_scores(a, 2), ScoreVector({0.5, 0.5}));
  const double z[] = {0.0, 0.0, 0.0, 0.0};
  EXPECT_EQ(normalize_scores(z, 4), ScoreVector::uniform(4));
  const double b[] = {1.0, 3.0};
  const auto s = normalize_scores(b, 2);
  EXPECT_DOUBLE_EQ(s[0], 0.25);
  EXPECT_DOUBLE_EQ(s[1], 0.75);
}

TEST(NormalizeScores, Errors) {
  const double a[] = {1.0, 2.0, 3.0};
  EXPECT_THROW(normalize_scores(a, 2), SchemaError);
  const double neg[] = {1.0, -0.1};
  EXPECT_THROW(normalize_scores(neg, 2), InvalidScoreError);
  const double nan[] = {1.0, std::numeric_limits<double>::quiet_NaN()};
  EXPECT_THROW(normalize_scores(nan, 2), InvalidScoreError);
  const double inf[] = {1.0, std::numeric_limits<double>::infinity()};
  EXPECT_THROW(normalize_scores(inf, 2), InvalidScoreError);
}

TEST(NormalizeScores, SumsToOneAndScaleInvariant) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t p = 2 + rng.below(9);
    std::vector<double> v(p);
    for (auto& x : v) x = rng.bernoulli(0.2) ? 0.0 : rng.uniform(0.0, 100.0);
    const auto s = normalize_scores(v, p);
    EXPECT_NEAR(std::accumulate(s.values().begin(), s.values().end(), 0.0), 1.0, 1e-9);
    const double c = std::exp(rng.uniform(-20.0, 20.0));
    std::vector<double> scaled(v);
    for (auto& x : scaled) x *= c;
    const auto t = normalize_scores(scaled, p);
    for (std::size_t k = 0; k < p; ++k) EXPECT_NEAR(s[k], t[k], 1e-12);
  }
}

TEST(ScoreVector, ArgmaxPrefersLowestIndex) {
  EXPECT_EQ(ScoreVector({0.2, 0.4, 0.4}).argmax(), 1u);
  EXPECT_EQ(ScoreVector::uniform(5).argmax(), 0u);
}

TEST(IdealPoint, OneHot) {
  const auto o = ideal_point(1, 4);
  EXPECT_EQ(o.dense(), (std::vector<double>{0, 1, 0, 0}));
  EXPECT_EQ(ideal_point(0, 2).dense(), (std::vector<double>{1, 0}));
  const auto last = ideal_point(9, 10).dense();
  EXPECT_EQ(last.back(), 1.0);
  EXPECT_EQ(std::accumulate(last.begin(), last.end(), 0.0), 1.0);
  EXPECT_THROW(ideal_point(4, 4), SchemaError);
  for (std::size_t p = 2; p < 12; ++p)
    for (ClassIndex l = 0; l < p; ++l) {
      double l1 = 0.0;
      for (std::size_t k = 0; k < p; ++k) l1 += std::abs(ideal_point(l, p)[k]);
      EXPECT_EQ(l1, 1.0);
    }
}

TEST(StreamSchema, ValidatesInstances) {
  StreamSchema schema({AttributeInfo::numeric("a"), AttributeInfo::nominal("b", {"x", "y", "z"})}, {"n", "p"});
  EXPECT_EQ(schema.numeric_indices().size(), 1u);
  EXPECT_EQ(schema.nominal_indices()[0], 1u);
  const double ok[] = {0.3, 2.0};
  EXPECT_NO_THROW(schema.validate(ok));
  const double bad_index[] = {0.3, 3.0};
  EXPECT_THROW(schema.validate(bad_index), SchemaError);
  const double fractional[] = {0.3, 1.5};
  EXPECT_THROW(schema.validate(fractional), SchemaError);
  const double short_row[] = {0.3};
  EXPECT_THROW(schema.validate(short_row), SchemaError);
  EXPECT_THROW(StreamSchema({AttributeInfo::numeric("a")}, {"only"}), SchemaError);
  EXPECT_TRUE(schema.compatible_with(schema));
  EXPECT_FALSE(schema.compatible_with(StreamSchema::all_numeric(2, 2)));
}

TEST(Instance, MakeChecksFeatures) {
  StreamSchema schema({AttributeInfo::numeric("a"), AttributeInfo::nominal("b", 3)}, {"n", "p"});
  const FeatureValue f[] = {FeatureValue::numeric(1.5), FeatureValue::nominal(2, 3)};
  const auto inst = Instance::make(schema, f, 1);
  EXPECT_EQ(inst.x, (std::vector<double>{1.5, 2.0}));
  EXPECT_EQ(inst.label, 1u);
  EXPECT_EQ(inst.weight, 1.0);
  EXPECT_THROW(Instance::make(schema, f, 2), SchemaError);
  const FeatureValue wrong_kind[] = {FeatureValue::nominal(0, 3), FeatureValue::nominal(2, 3)};
  EXPECT_THROW(Instance::make(schema, wrong_kind, 0), SchemaError);
}

Instance numbered(double v) {
  Instance i;
  i.x = {v};
  return i;
}

TEST(InstanceWindow, FifoEviction) {
  InstanceWindow w(3);
  const ComponentId none[] = {0};
  auto push = [&](double v) { return w.push(numbered(v), {}, std::span<const ComponentId>(none, 0)); };
  EXPECT_FALSE(push(1).has_value());
  EXPECT_EQ(w.size(), 1u);
  push(2);
  push(3);
  const auto evicted = push(4);
  ASSERT_TRUE(evicted.has_value());
  EXPECT_EQ(evicted->instance.x[0], 1.0);
  EXPECT_EQ(w.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(w.at(i).instance.x[0], static_cast<double>(i + 2));
  EXPECT_THROW(w.at(3), ConsistencyError);
}

TEST(InstanceWindow, FillAndOrderProperty) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t cap = 1 + rng.below(20);
    const std::size_t k = rng.below(3 * cap);
    InstanceWindow w(cap);
    for (std::size_t i = 0; i < k; ++i) {
      w.push(numbered(static_cast<double>(i)), {}, {});
      ASSERT_LE(w.size(), cap);
    }
    const std::size_t first = k > cap ? k - cap : 0;
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(w.at(i).instance.x[0], static_cast<double>(first + i));
  }
}

TEST(InstanceWindow, RequiresScoresForLiveComponents) {
  InstanceWindow w(2);
  const ComponentId live[] = {4, 7};
  CachedScores partial;
  partial.set(4, ScoreVector::uniform(2));
  EXPECT_THROW(w.push(numbered(0), partial, live), ConsistencyError);
  partial.set(7, ScoreVector::uniform(2));
  EXPECT_NO_THROW(w.push(numbered(0), partial, live));
  EXPECT_EQ(w.at(0).scores.size(), 2u);
  w.forget_component(4);
  EXPECT_EQ(w.at(0).scores.size(), 1u);
  EXPECT_EQ(w.at(0).scores.find(4), nullptr);
  EXPECT_NE(w.at(0).scores.find(7), nullptr);
}

TEST(DataChunk, ReleasesOnFill) {
  DataChunk c(3);
  EXPECT_FALSE(c.push(numbered(0)));
  EXPECT_FALSE(c.push(numbered(1)));
  const auto full = c.push(numbered(2));
  ASSERT_TRUE(full.has_value());
  EXPECT_EQ(full->size(), 3u);
  EXPECT_EQ(c.size(), 0u);
}

TEST(SpecString, Parse) {
  const auto s = SpecString::parse("base1:vote=dwm(0.5,0.2), m = 4,L=16m");
  EXPECT_EQ(s.name, "base1");
  ASSERT_EQ(s.params.size(), 3u);
  EXPECT_EQ(s.get("vote", ""), "dwm(0.5,0.2)");
  EXPECT_EQ(s.get_uint("m", 0), 4u);
  EXPECT_EQ(s.get_bytes("L", 0), 16u << 20);
  EXPECT_EQ(s.get_double("missing", 2.5), 2.5);
  EXPECT_EQ(SpecString::parse("sea").params.size(), 0u);
  EXPECT_THROW(SpecString::parse(":a=1"), ParseError);
  EXPECT_THROW(SpecString::parse("x:a"), ParseError);
  EXPECT_THROW(SpecString::parse("x:a=f(1"), ParseError);
  EXPECT_THROW(SpecString::parse("x:m=abc").get_uint("m", 0), ParseError);
  EXPECT_THROW(SpecString::parse("x:q=1").require_known({"m", "h"}), ParseError);
  EXPECT_EQ(SpecString::parse(s.str()).params, s.params);
}

}  // namespace
}  // namespace goowe
