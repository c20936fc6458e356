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

#include "brex/evaluate.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "brex/error.h"
#include "support/test_util.h"

namespace brex {
namespace {

ScoredPair Scored(const std::string &a, const std::string &b, double c = 0.9) {
  return {{{a, "ORG"}, {b, "ORG"}}, c};
}

GoldKB Gold(int n, Pairing pairing = Pairing::kOrdered) {
  GoldKB g("acquired", pairing);
  for (int k = 0; k < n; ++k) g.Add("A" + std::to_string(k), "B" + std::to_string(k));
  return g;
}

TEST(Prf1Test, ExactMatch) {
  std::vector<ScoredPair> out;
  for (int k = 0; k < 5; ++k) out.push_back(Scored("A" + std::to_string(k), "B" + std::to_string(k)));
  PrecisionRecall r = Prf1(out, Gold(5));
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f1, 1.0);
  EXPECT_EQ(r.out_count, 5u);
}

TEST(Prf1Test, HarmonicMean) {
  std::vector<ScoredPair> out;
  for (int k = 0; k < 8; ++k) out.push_back(Scored("A" + std::to_string(k), "B" + std::to_string(k)));
  out.push_back(Scored("X", "Y"));
  out.push_back(Scored("Y", "Z"));
  PrecisionRecall r = Prf1(out, Gold(16));
  EXPECT_DOUBLE_EQ(r.precision, 0.8);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_NEAR(r.f1, 0.6154, 5e-5);
  EXPECT_EQ(r.out_count, 10u);
}

TEST(Prf1Test, ThresholdDedupAndPairing) {
  std::vector<ScoredPair> out = {Scored("A0", "B0", 0.4), Scored("a1", "b1"),
                                 Scored("A1", "B1"), Scored("B2", "A2")};
  PrecisionRecall r = Prf1(out, Gold(4));
  EXPECT_EQ(r.out_count, 2u);
  EXPECT_EQ(r.correct, 1u);
  r = Prf1(out, Gold(4, Pairing::kBiset));
  EXPECT_EQ(r.correct, 2u);
  std::vector<ScoredPair> weak = {Scored("A0", "B0", 0.1)};
  r = Prf1(weak, Gold(4));
  EXPECT_EQ(r.out_count, 0u);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.f1, 0.0);
}

TEST(Prf1Test, EmptyGoldThrows) {
  std::vector<ScoredPair> out = {Scored("A", "B")};
  EXPECT_THROW(Prf1(out, Gold(0)), std::invalid_argument);
}

TEST(ParseGoldTest, SkipsCommentsAndRejectsBadLines) {
  GoldKB g = ParseGold("# header\nAdidas\tReebok\n\nGoogle\tDoubleClick\r\n",
                       Pairing::kOrdered);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.Contains({{"google", "ORG"}, {"doubleclick", "ORG"}}));
  try {
    ParseGold("A\tB\nno tab here\n", Pairing::kOrdered, "", "gold.tsv");
    FAIL();
  } catch (const InputError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(CountHitsTest, InclusionExclusion) {
  using testing::Basis;
  using testing::MakeInstance;
  using testing::MakeTemplate;
  std::vector<Instance> gamma;
  // 3 pair-only hits, 5 template-only hits, 2 both, 4 neither.
  int id = 0;
  auto add = [&](int n, bool pair, bool tmpl) {
    for (int k = 0; k < n; ++k, ++id) {
      gamma.push_back(MakeInstance(id, pair ? "S" : "N" + std::to_string(id),
                                   pair ? "T" : "M",
                                   MakeTemplate(Basis(2, tmpl ? 0 : 1))));
    }
  };
  add(3, true, false);
  add(5, false, true);
  add(2, true, true);
  add(4, false, false);
  SeedState s;
  s.positive_pairs.Insert({{"S", "ORG"}, {"T", "ORG"}});
  s.positive_templates.Insert(MakeTemplate(Basis(2, 0)));
  HitCount h = CountHits(gamma, s, RunConfig{});
  EXPECT_EQ(h.by_pair, 5u);
  EXPECT_EQ(h.by_template, 7u);
  EXPECT_EQ(h.either, 10u);
  EXPECT_EQ(CountHits(gamma, SeedState(), RunConfig{}).either, 0u);
}

TEST(ExtractorStatsTest, Means) {
  std::vector<ExtractorSummary> s = {{"a", 4, 3, 1, 1.0}, {"b", 6, 1, 0, 0.5}};
  ExtractorStats x = ComputeExtractorStats(s, nullptr);
  EXPECT_EQ(x.count, 2u);
  EXPECT_EQ(x.aie, 5.0);
  EXPECT_EQ(x.aes, 0.75);
  EXPECT_EQ(x.ap, 2.0);
  EXPECT_EQ(x.an, 0.5);
  EXPECT_EQ(x.anp, 0.25);
  EXPECT_FALSE(x.ane.has_value());
}

TEST(ExtractorStatsTest, RatioOfMeans) {
  std::vector<ExtractorSummary> s = {{"a", 1, 313.2, 44.8, 1.0}};
  EXPECT_NEAR(*ComputeExtractorStats(s, nullptr).anp, 0.143, 5e-4);
  std::vector<ExtractorSummary> none = {{"a", 1, 0, 2, 0.0}};
  EXPECT_FALSE(ComputeExtractorStats(none, nullptr).anp.has_value());
}

TEST(ExtractorStatsTest, LabelFractionsOverLabeledOnly) {
  std::vector<ExtractorSummary> s = {{"a", 1, 1, 0, 0.9},
                                     {"b", 1, 1, 0, 0.3},
                                     {"c", 1, 1, 0, 0.8},
                                     {"d", 1, 1, 0, 0.2}};
  NoiseLabels labels = {{"a", false}, {"b", false}, {"c", true}};
  ExtractorStats x = ComputeExtractorStats(s, &labels);
  EXPECT_DOUBLE_EQ(*x.ane, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(*x.anne, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*x.annlc, 1.0 / 3.0);
}

TEST(NoiseLabelsTest, LoadsFlags) {
  auto path = std::filesystem::temp_directory_path() / "brex_labels_test.tsv";
  {
    std::ofstream out(path);
    out << "# sig\tnoisy\nabc\t1\ndef\tclean\nghi\tfalse\n";
  }
  NoiseLabels l = LoadNoiseLabels(path.string());
  EXPECT_TRUE(l.at("abc"));
  EXPECT_FALSE(l.at("def"));
  EXPECT_FALSE(l.at("ghi"));
  {
    std::ofstream out(path);
    out << "abc\tmaybe\n";
  }
  EXPECT_THROW(LoadNoiseLabels(path.string()), InputError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace brex
