// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "goowe/ensemble/goowe_ensemble.hpp"
#include "goowe/eval/prequential.hpp"
#include "goowe/learners/factory.hpp"
#include "goowe/streams/generators.hpp"
#include "test_util.hpp"

namespace goowe {
namespace {

// Predicts with a fixed rule; records the call order.
class RuleEnsemble final : public StreamClassifier {
 public:
  using Rule = std::function<ClassIndex(std::span<const double>)>;
  RuleEnsemble(std::size_t p, Rule rule) : p_(p), rule_(std::move(rule)) {}
  ScoreVector predict(std::span<const double> x) override {
    EXPECT_FALSE(awaiting_learn_) << "two predictions without a learn";
    awaiting_learn_ = true;
    last_x_.assign(x.begin(), x.end());
    std::vector<double> s(p_, 0.0);
    s[rule_(x)] = 1.0;
    return normalize_scores(s, p_);
  }
  void learn(const Instance& inst) override {
    EXPECT_TRUE(awaiting_learn_) << "learn before predict";
    EXPECT_EQ(inst.x, last_x_);
    awaiting_learn_ = false;
    ++learned_;
  }
  std::size_t memory_bytes() const override { return 1024 * 1024; }
  std::string_view name() const override { return "rule"; }
  std::size_t learned() const noexcept { return learned_; }

 private:
  std::size_t p_;
  Rule rule_;
  bool awaiting_learn_ = false;
  std::vector<double> last_x_;
  std::size_t learned_ = 0;
};

TEST(Prequential, PerfectOracle) {
  SeaGenerator gen({0, 0.0}, 1);
  RuleEnsemble oracle(2, [&](std::span<const double> x) { return gen.label_of(x); });
  const auto trace = test_then_train(oracle, gen, {.report_interval = 100, .max_instances = 1000});
  EXPECT_EQ(trace.instances, 1000u);
  EXPECT_EQ(trace.correct, 1000u);
  EXPECT_DOUBLE_EQ(trace.accuracy(), 100.0);
  EXPECT_EQ(trace.records.size(), 10u);
  EXPECT_EQ(oracle.learned(), 1000u);
  for (const auto& r : trace.records) {
    EXPECT_DOUBLE_EQ(r.accuracy, 100.0);
    EXPECT_DOUBLE_EQ(r.memory_mb, 1.0);
    EXPECT_GE(r.cs_per_1k, 0.0);
  }
}

TEST(Prequential, ConstantPredictorOnBalancedStream) {
  NoiseGenerator gen(2, 2, 2);
  RuleEnsemble constant(2, [](std::span<const double>) { return ClassIndex{0}; });
  const auto trace = test_then_train(constant, gen, {.report_interval = 500, .max_instances = 20000});
  EXPECT_NEAR(trace.accuracy(), 50.0, 2.0);
}

TEST(Prequential, MemorizerCannotSeeTheCurrentLabel) {
  NoiseGenerator gen(3, 4, 3);
  GooweConfig cfg;
  cfg.chunk_size = 50;
  cfg.window_size = 50;
  GooweEnsemble e(gen.schema(), cfg, [] { return std::make_unique<testing::Memorizer>(4); });
  const auto trace = test_then_train(e, gen, {.report_interval = 500, .max_instances = 10000});
  EXPECT_NEAR(trace.accuracy(), 25.0, 2.0);
}

TEST(Prequential, ReportIntervalDoesNotChangeAggregate) {
  std::vector<double> acc;
  for (std::size_t interval : {1u, 37u, 500u, 100000u}) {
    SeaGenerator gen({0, 0.1}, 4);
    GooweConfig cfg;
    cfg.chunk_size = 100;
    GooweEnsemble e(gen.schema(), cfg, make_learner_factory({}, gen.schema()));
    const auto trace = test_then_train(e, gen, {.report_interval = interval, .max_instances = 3000});
    acc.push_back(trace.accuracy());
    EXPECT_EQ(trace.records.size(), (3000 + interval - 1) / interval);
    EXPECT_EQ(trace.records.back().instances, 3000u);
    EXPECT_DOUBLE_EQ(trace.records.back().cumulative_accuracy, trace.accuracy());
  }
  for (double a : acc) EXPECT_EQ(a, acc.front());
}

TEST(Prequential, EmptyEnsembleReportsBaseMemory) {
  SeaGenerator gen({}, 5);
  GooweConfig cfg;
  cfg.chunk_size = 1000;
  GooweEnsemble e(gen.schema(), cfg, make_learner_factory({}, gen.schema()));
  const auto trace = test_then_train(e, gen, {.report_interval = 100, .max_instances = 500});
  for (const auto& r : trace.records) EXPECT_DOUBLE_EQ(r.memory_mb, bytes_to_mb(GooweEnsemble::kBaseBytes));
}

TEST(Prequential, Errors) {
  const auto schema = StreamSchema::all_numeric(1, 2);
  VectorSource empty(schema, {});
  RuleEnsemble r(2, [](std::span<const double>) { return ClassIndex{0}; });
  EXPECT_THROW(test_then_train(r, empty, {}), Error);
  Instance bad;
  bad.x = {0.0};
  bad.label = 5;
  VectorSource wrong(schema, {bad});
  EXPECT_THROW(test_then_train(r, wrong, {}), SchemaError);
  VectorSource one(schema, {});
  EXPECT_THROW(test_then_train(r, one, {.report_interval = 0}), SchemaError);
}

TEST(Prequential, TraceCsvHasNoTimingColumn) {
  SeaGenerator gen({}, 6);
  RuleEnsemble r(2, [&](std::span<const double> x) { return gen.label_of(x); });
  const auto trace = test_then_train(r, gen, {.report_interval = 10, .max_instances = 25});
  std::ostringstream csv, timing;
  write_trace_csv(csv, trace);
  write_timing_csv(timing, trace);
  EXPECT_EQ(csv.str(), "interval,instances,accuracy,cumulative_accuracy,memory_mb\n0,10,100,100,1\n1,20,100,100,1\n2,25,100,100,1\n");
  EXPECT_EQ(timing.str().substr(0, 29), "interval,instances,cs_per_1k\n");
}

}  // namespace
}  // namespace goowe
