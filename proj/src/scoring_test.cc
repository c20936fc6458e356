// Copyright 2026 The brex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "brex/scoring.h"

#include <gtest/gtest.h>

#include <random>

#include "support/test_util.h"

namespace brex {
namespace {

using testing::Basis;
using testing::MakeInstance;
using testing::MakeTemplate;

TEST(ConfidenceFromCountsTest, HandValues) {
  EXPECT_NEAR(ConfidenceFromCounts(2, 1, 0, 1, 0), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(ConfidenceFromCounts(5, 0, 0, 0.5, 0.0001), 1.0);
  EXPECT_NEAR(ConfidenceFromCounts(4, 1, 10, 0.5, 0.0001),
              1.0 / (1.0 + 0.125 + 0.00025), 1e-12);
  EXPECT_EQ(ConfidenceFromCounts(0, 3, 2, 0.5, 0.0001), 0.0);
}

TEST(ConfidenceFromCountsTest, ScalingOnlyRegimeIsOne) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int t = 0; t < 1000; ++t) {
    EXPECT_EQ(ConfidenceFromCounts(1.0 + u(rng), u(rng), u(rng), 0, 0), 1.0);
  }
}

TEST(ConfidenceFromCountsTest, RatioFormAgrees) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int t = 0; t < 1000; ++t) {
    double p = 1.0 + u(rng), n = u(rng), x = u(rng), wn = u(rng) / 50,
           wu = u(rng) / 5e5;
    EXPECT_NEAR(ConfidenceFromCounts(p, n, x, wn, wu),
                1.0 / (1.0 + wn * n / p + wu * x / p), 1e-12);
  }
}

class CountTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int k = 0; k < 10; ++k) {
      gamma_.push_back(MakeInstance(k, "A" + std::to_string(k), "B",
                                    MakeTemplate(Basis(3, k < 4 ? 0 : 1))));
    }
    for (const Instance &i : gamma_) e_.members.push_back(&i);
  }
  std::vector<Instance> gamma_;
  Extractor e_;
};

TEST_F(CountTest, PositivesPerMode) {
  SeedState s;
  s.positive_pairs.Insert(gamma_[0].pair);
  s.positive_pairs.Insert(gamma_[5].pair);
  s.positive_templates.Insert(MakeTemplate(Basis(3, 0)));
  RunConfig cfg;
  cfg.mode = Mode::kBree;
  EXPECT_EQ(CountPositives(e_, s.positive_pairs, s.positive_templates, cfg), 2);
  cfg.mode = Mode::kBret;
  EXPECT_EQ(CountPositives(e_, s.positive_pairs, s.positive_templates, cfg), 4);
  cfg.mode = Mode::kBrej;
  // Member 0 hits both and counts twice.
  EXPECT_EQ(CountPositives(e_, s.positive_pairs, s.positive_templates, cfg), 6);
  cfg.mode = Mode::kBret;
  EXPECT_EQ(CountPositives(e_, s.positive_pairs, TemplateSet(), cfg), 0);
}

TEST_F(CountTest, Unknowns) {
  SeedState s;
  EXPECT_EQ(CountUnknown(e_, s), 10u);
  for (int k : {0, 1, 2}) s.positive_pairs.Insert(gamma_[k].pair);
  s.negative_pairs.Insert(gamma_[9].pair);
  EXPECT_EQ(CountUnknown(e_, s), 6u);
  for (const Instance &i : gamma_) s.positive_pairs.Insert(i.pair);
  EXPECT_EQ(CountUnknown(e_, s), 0u);
}

TEST_F(CountTest, ScoreFillsCounts) {
  SeedState s;
  s.positive_pairs.Insert(gamma_[0].pair);
  s.negative_pairs.Insert(gamma_[1].pair);
  RunConfig cfg;
  cfg.mode = Mode::kBree;
  double c = ScoreExtractor(e_, s, cfg);
  EXPECT_EQ(e_.n_pos, 1);
  EXPECT_EQ(e_.n_neg, 1);
  EXPECT_EQ(e_.n_unknown, 8u);
  EXPECT_EQ(c, e_.confidence);
  EXPECT_EQ(ExtractorConfidence(e_, s, cfg), c);
}

TEST(InstanceConfidenceTest, ProductAndNoisyOr) {
  std::vector<Instance> gamma = {
      MakeInstance(0, "a", "b", MakeTemplate(Basis(2, 0))),
      MakeInstance(1, "c", "d", MakeTemplate({0.75, std::sqrt(1 - 0.5625)}))};
  Extractor e;
  e.members = {&gamma[0]};
  e.confidence = 0.8;
  RunConfig cfg;
  EXPECT_NEAR(InstanceClusterConfidence(gamma[1], e, cfg), 0.6, 1e-12);

  Extractor far;
  far.members = {&gamma[0]};
  far.confidence = 0.9;
  Instance orthogonal = MakeInstance(2, "x", "y", MakeTemplate(Basis(2, 1)));
  EXPECT_EQ(InstanceClusterConfidence(orthogonal, far, cfg), 0.0);

  e.confidence = 1.0;
  EXPECT_EQ(InstanceClusterConfidence(gamma[0], e, cfg), 1.0);
}

TEST(CombineConfidencesTest, HandValues) {
  EXPECT_EQ(CombineConfidences(std::vector<double>{0.54}), 0.54);
  EXPECT_EQ(CombineConfidences(std::vector<double>{0.5, 0.5}), 0.75);
  EXPECT_EQ(CombineConfidences({}), 0.0);
}

TEST(InstanceConfidenceTest, OnlyCoveringExtractorsCount) {
  std::vector<Instance> gamma = {
      MakeInstance(0, "a", "b", MakeTemplate(Basis(2, 0))),
      MakeInstance(1, "c", "d", MakeTemplate(Basis(2, 1)))};
  std::vector<Extractor> lambda(2);
  lambda[0].members = {&gamma[0]};
  lambda[0].confidence = 0.5;
  lambda[1].members = {&gamma[1]};
  lambda[1].confidence = 0.9;
  RunConfig cfg;
  EXPECT_EQ(InstanceConfidence(gamma[0], lambda, cfg), 0.5);
  Instance nowhere = MakeInstance(2, "e", "f",
                                  MakeTemplate(Basis(2, 0), {}, {}, {"X", "Y"}));
  EXPECT_EQ(InstanceConfidence(nowhere, lambda, cfg), 0.0);
}

TEST(CategorizeTest, Mapping) {
  RunConfig cfg;
  Extractor e;
  e.confidence = 0.85;
  EXPECT_EQ(CategorizeExtractor(e, false, cfg), ExtractorCategory::kNnhc);
  e.confidence = 0.6667;
  EXPECT_EQ(CategorizeExtractor(e, false, cfg), ExtractorCategory::kNnlc);
  e.confidence = 0.9;
  EXPECT_EQ(CategorizeExtractor(e, true, cfg), ExtractorCategory::kNhc);
  e.confidence = 0.2;
  EXPECT_EQ(CategorizeExtractor(e, true, cfg), ExtractorCategory::kNlc);
  EXPECT_FALSE(CategorizeExtractor(e, std::nullopt, cfg).has_value());
  EXPECT_EQ(CategoryName(ExtractorCategory::kNnlc), "NNLC");
}

TEST(ExtractorSignatureTest, OrderFreeAndDistinct) {
  std::vector<Instance> gamma;
  for (int k = 0; k < 4; ++k) {
    gamma.push_back(MakeInstance(k, "a", "b", MakeTemplate(Basis(2, 0))));
  }
  Extractor a, b, c;
  a.members = {&gamma[0], &gamma[1], &gamma[2]};
  b.members = {&gamma[2], &gamma[0], &gamma[1]};
  c.members = {&gamma[0], &gamma[1], &gamma[3]};
  EXPECT_EQ(ExtractorSignature(a), ExtractorSignature(b));
  EXPECT_NE(ExtractorSignature(a), ExtractorSignature(c));
  EXPECT_EQ(ExtractorSignature(a).size(), 16u);
}

}  // namespace
}  // namespace brex
