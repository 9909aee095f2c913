// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "goowe/baselines/scaffold.hpp"
#include "goowe/learners/factory.hpp"
#include "goowe/streams/generators.hpp"

namespace goowe {
namespace {

struct Outcome {
  std::uint64_t fingerprint;
  std::size_t correct;
  std::size_t memory;
};

Outcome run(ScaffoldConfig cfg, std::size_t n, std::uint64_t seed) {
  cfg.chunk_size = 200;
  cfg.window_size = 200;
  cfg.max_components = 4;
  RbfGenerator gen({.classes = 3, .drift_speed = 0.01, .drift_interval = 1}, seed);
  BlockEnsembleScaffold e(gen.schema(), cfg, make_learner_factory({}, gen.schema()));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inst = *gen.next();
    if (e.predict(inst.x).argmax() == inst.label) ++correct;
    if (e.component_count() > 0) {
      EXPECT_EQ(e.last_weights().size(), e.component_count());
    }
    e.learn(inst);
    EXPECT_LE(e.component_count(), 4u);
  }
  return {e.training_fingerprint(), correct, e.memory_bytes()};
}

TEST(Scaffold, Base1VoteRulesShareTraining) {
  const auto mv = run(ScaffoldConfig::base1(parse_rule("mv")), 2000, 1);
  for (const char* rule : {"goowe", "dwm", "awe", "aue2"}) {
    const auto other = run(ScaffoldConfig::base1(parse_rule(rule)), 2000, 1);
    EXPECT_EQ(other.fingerprint, mv.fingerprint) << rule;
    EXPECT_EQ(other.memory, mv.memory) << rule;
  }
}

TEST(Scaffold, Base2ReplacementRulesDiverge) {
  const auto aue2 = run(ScaffoldConfig::base2(parse_rule("aue2")), 3000, 2);
  const auto goowe = run(ScaffoldConfig::base2(parse_rule("goowe")), 3000, 2);
  EXPECT_NE(aue2.fingerprint, goowe.fingerprint);
  EXPECT_EQ(ScaffoldConfig::base2(parse_rule("goowe")).vote.kind, RuleKind::kMajority);
  EXPECT_EQ(ScaffoldConfig::base1(parse_rule("goowe")).replacement.kind, RuleKind::kAue2);
}

TEST(Scaffold, GooweOnBothAxesMatchesGooweEnsemble) {
  ScaffoldConfig cfg;
  cfg.vote = parse_rule("goowe");
  cfg.replacement = parse_rule("goowe");
  cfg.chunk_size = 150;
  cfg.window_size = 120;
  cfg.max_components = 3;
  GooweConfig gc;
  gc.chunk_size = 150;
  gc.window_size = 120;
  gc.max_components = 3;
  SeaGenerator ga({0, 0.1}, 3), gb({0, 0.1}, 3);
  BlockEnsembleScaffold s(ga.schema(), cfg, make_learner_factory({}, ga.schema()));
  GooweEnsemble g(gb.schema(), gc, make_learner_factory({}, gb.schema()));
  for (int i = 0; i < 2000; ++i) {
    const auto ia = *ga.next(), ib = *gb.next();
    const auto ps = s.predict(ia.x), pg = g.predict(ib.x);
    for (std::size_t c = 0; c < 2; ++c) ASSERT_NEAR(ps[c], pg[c], 1e-9) << "instance " << i;
    s.learn(ia);
    g.learn(ib);
  }
  EXPECT_EQ(s.counters().removals, g.counters().removals);
}

TEST(Scaffold, DeterministicAndValid) {
  const auto a = run(ScaffoldConfig::base1(parse_rule("dwm(0.5,0.01)")), 1500, 4);
  const auto b = run(ScaffoldConfig::base1(parse_rule("dwm(0.5,0.01)")), 1500, 4);
  EXPECT_EQ(a.fingerprint, b.fingerprint);
  EXPECT_EQ(a.correct, b.correct);
  EXPECT_GT(a.correct, 1500u / 3);
}

}  // namespace
}  // namespace goowe
