// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "goowe/learners/factory.hpp"
#include "goowe/learners/naive_bayes.hpp"
#include "test_util.hpp"

namespace goowe {
namespace {

Instance point(std::vector<double> x, ClassIndex label) {
  Instance i;
  i.x = std::move(x);
  i.label = label;
  return i;
}

TEST(NaiveBayes, EmptyModelScoresZeroThenUniform) {
  NaiveBayesClassifier nb(StreamSchema::all_numeric(2, 3));
  const double x[] = {0.1, 0.2};
  EXPECT_EQ(nb.score(x), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(nb.normalized_score(x), ScoreVector::uniform(3));
}

TEST(NaiveBayes, SingleInstanceRecallsItsLabel) {
  NaiveBayesClassifier nb(StreamSchema::all_numeric(3, 4));
  nb.train_on(point({1, 2, 3}, 2));
  EXPECT_EQ(nb.normalized_score(std::vector<double>{1, 2, 3}).argmax(), 2u);
}

// Exact Gaussian class posterior from the sample moments of the training data.
struct GaussOracle {
  double n[2] = {0, 0}, sum[2] = {0, 0}, sq[2] = {0, 0};
  void add(double x, int c) {
    n[c] += 1;
    sum[c] += x;
    sq[c] += x * x;
  }
  double log_joint(double x, int c) const {
    const double mean = sum[c] / n[c];
    const double var = std::max((sq[c] - n[c] * mean * mean) / (n[c] - 1), 1e-9);
    return std::log(n[c] / (n[0] + n[1])) - 0.5 * std::log(2 * std::numbers::pi * var) -
           (x - mean) * (x - mean) / (2 * var);
  }
  int argmax(double x) const { return log_joint(x, 1) > log_joint(x, 0) ? 1 : 0; }
};

TEST(NaiveBayes, MatchesExactGaussianPosterior) {
  Rng rng(12);
  NaiveBayesClassifier nb(StreamSchema::all_numeric(1, 2));
  GaussOracle oracle;
  for (int i = 0; i < 400; ++i) {
    const int c = rng.bernoulli(0.35) ? 1 : 0;
    const double x = c == 0 ? rng.gaussian() * 1.0 : 1.5 + rng.gaussian() * 0.6;
    nb.train_on(point({x}, static_cast<ClassIndex>(c)));
    oracle.add(x, c);
  }
  for (int q = 0; q < 100; ++q) {
    const double x = rng.uniform(-4.0, 5.0);
    const auto s = nb.normalized_score(std::vector<double>{x});
    EXPECT_EQ(s.argmax(), static_cast<ClassIndex>(oracle.argmax(x))) << x;
    const double l0 = oracle.log_joint(x, 0), l1 = oracle.log_joint(x, 1);
    EXPECT_NEAR(s[1], 1.0 / (1.0 + std::exp(l0 - l1)), 1e-9);
  }
}

TEST(NaiveBayes, WellSeparatedClassesAtMean) {
  Rng rng(13);
  NaiveBayesClassifier nb(StreamSchema::all_numeric(2, 2));
  for (int i = 0; i < 200; ++i) {
    nb.train_on(point({rng.gaussian(), rng.gaussian()}, 0));
    nb.train_on(point({10 + rng.gaussian(), 10 + rng.gaussian()}, 1));
  }
  EXPECT_EQ(nb.normalized_score(std::vector<double>{0, 0}).argmax(), 0u);
  EXPECT_EQ(nb.normalized_score(std::vector<double>{10, 10}).argmax(), 1u);
}

TEST(NaiveBayes, NominalLaplaceSmoothing) {
  StreamSchema schema({AttributeInfo::nominal("a", 3)}, {"x", "y"});
  NaiveBayesClassifier nb(schema);
  // class x: a = 0,0,1 ; class y: a = 2
  nb.train_on(point({0}, 0));
  nb.train_on(point({0}, 0));
  nb.train_on(point({1}, 0));
  nb.train_on(point({2}, 1));
  // P(x) P(a=0|x) = 3/4 * (2+1)/(3+3); P(y) P(a=0|y) = 1/4 * (0+1)/(1+3)
  const double px = 0.75 * 3.0 / 6.0, py = 0.25 * 1.0 / 4.0;
  const auto s = nb.normalized_score(std::vector<double>{0});
  EXPECT_NEAR(s[0], px / (px + py), 1e-12);
  EXPECT_EQ(nb.model().nominal_count(0, 0, 0), 2.0);
}

TEST(NaiveBayes, ConstantAttributeUsesVarianceFloor) {
  NaiveBayesClassifier nb(StreamSchema::all_numeric(1, 2));
  for (int i = 0; i < 10; ++i) nb.train_on(point({1.0}, 0));
  nb.train_on(point({2.0}, 1));
  nb.train_on(point({2.0}, 1));
  EXPECT_EQ(nb.model().numeric_summary(0, 0).variance, NaiveBayesModel::kVarianceFloor);
  const auto s = nb.normalized_score(std::vector<double>{1.0});
  EXPECT_TRUE(std::isfinite(s[0]));
  EXPECT_EQ(s.argmax(), 0u);
}

TEST(NaiveBayes, RejectsBadInputsWithoutMutation) {
  StreamSchema schema({AttributeInfo::nominal("a", 2)}, {"x", "y"});
  NaiveBayesClassifier nb(schema);
  EXPECT_THROW(nb.train_on(point({5}, 0)), SchemaError);
  EXPECT_THROW(nb.train_on(point({0}, 3)), SchemaError);
  EXPECT_THROW(nb.train_on(point({0, 1}, 0)), SchemaError);
  EXPECT_EQ(nb.model().total_weight(), 0.0);
  EXPECT_EQ(nb.memory_estimate(), NaiveBayesModel::kBaseBytes + 8 * 2);
}

TEST(NaiveBayes, MemoryFormula) {
  StreamSchema schema({AttributeInfo::numeric("a"), AttributeInfo::nominal("b", 3)}, {"x", "y", "z"});
  NaiveBayesClassifier nb(schema);
  const std::size_t per_class = NaiveBayesModel::kClassStatsBytes + 48 * 1 + 16 * 3;
  EXPECT_EQ(nb.memory_estimate(), NaiveBayesModel::kBaseBytes + 8 * 3);
  nb.train_on(point({0.5, 1}, 2));
  EXPECT_EQ(nb.memory_estimate(), NaiveBayesModel::kBaseBytes + 8 * 3 + per_class);
  nb.train_on(point({0.7, 0}, 2));
  EXPECT_EQ(nb.memory_estimate(), NaiveBayesModel::kBaseBytes + 8 * 3 + per_class);
  nb.train_on(point({0.7, 0}, 0));
  EXPECT_EQ(nb.memory_estimate(), NaiveBayesModel::kBaseBytes + 8 * 3 + 2 * per_class);
}

TEST(LearnerFactory, BuildsFreshIndependentLearners) {
  const auto schema = StreamSchema::all_numeric(2, 2);
  auto make = make_learner_factory({LearnerKind::kNaiveBayes, {}}, schema);
  auto a = make(), b = make();
  a->train_on(point({0, 0}, 1));
  EXPECT_NE(a->memory_estimate(), b->memory_estimate());
  EXPECT_EQ(learner_name(LearnerKind::kHoeffdingTree), "ht");
  EXPECT_EQ(learner_name(LearnerKind::kNaiveBayes), "nb");
}

}  // namespace
}  // namespace goowe
