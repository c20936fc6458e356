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

#include "brex/config.h"

#include <gtest/gtest.h>

#include "brex/error.h"

namespace brex {
namespace {

TEST(RunConfigTest, Defaults) {
  RunConfig c;
  EXPECT_EQ(c.mode, Mode::kBrej);
  EXPECT_EQ(c.measure.kind, SimilarityKind::kCcAsym);
  EXPECT_EQ(c.tau_sim, 0.7);
  EXPECT_EQ(c.tau_cnf, 0.7);
  EXPECT_EQ(c.w_neg, 0.5);
  EXPECT_EQ(c.w_unknown, 0.0001);
  EXPECT_EQ(c.iterations, 3);
  EXPECT_EQ(c.pairing, Pairing::kOrdered);
  EXPECT_EQ(c.limits.max_before, 2);
  EXPECT_EQ(c.limits.max_between, 6);
  EXPECT_EQ(c.limits.max_after, 2);
  EXPECT_NO_THROW(ValidateConfig(c));
}

TEST(ValidateConfigTest, Ranges) {
  RunConfig c;
  c.tau_sim = 1.5;
  EXPECT_THROW(ValidateConfig(c), UsageError);
  c = RunConfig();
  c.tau_cnf = 0.0;
  EXPECT_THROW(ValidateConfig(c), UsageError);
  c = RunConfig();
  c.w_neg = -1.0;
  EXPECT_THROW(ValidateConfig(c), UsageError);
  c = RunConfig();
  c.iterations = 0;
  EXPECT_THROW(ValidateConfig(c), UsageError);
  c = RunConfig();
  c.output_threshold = 2.0;
  EXPECT_THROW(ValidateConfig(c), UsageError);
}

TEST(NamesTest, RoundTrip) {
  for (Mode m : {Mode::kBree, Mode::kBret, Mode::kBrej}) {
    EXPECT_EQ(ParseMode(ModeName(m)), m);
  }
  EXPECT_EQ(ParsePairing("biset"), Pairing::kBiset);
  EXPECT_EQ(ParseScoreAgainst(ScoreAgainstName(ScoreAgainst::kOriginal)),
            ScoreAgainst::kOriginal);
  EXPECT_FALSE(ParseMode("joint").has_value());
  EXPECT_TRUE(UsesPairs(Mode::kBrej) && UsesTemplates(Mode::kBrej));
  EXPECT_FALSE(UsesPairs(Mode::kBret));
  EXPECT_FALSE(UsesTemplates(Mode::kBree));
}

}  // namespace
}  // namespace brex
