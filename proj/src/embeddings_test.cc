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

#include "brex/embeddings.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "brex/error.h"

namespace brex {
namespace {

TEST(ParseEmbeddingsTest, ReadsDimensionAndWords) {
  EmbeddingStore e = ParseEmbeddings("acquire 1 0 0 0\nbuy 0 1 0 0.5\n");
  EXPECT_EQ(e.dimension(), 4u);
  EXPECT_EQ(e.size(), 2u);
  auto v = e.Lookup("buy");
  EXPECT_EQ(std::vector<double>(v.begin(), v.end()),
            (std::vector<double>{0, 1, 0, 0.5}));
}

TEST(ParseEmbeddingsTest, AbsentWordIsZero) {
  EmbeddingStore e = ParseEmbeddings("acquire 1 0 0 0\nbuy 0 1 0 0\n");
  auto v = e.Lookup("merger");
  ASSERT_EQ(v.size(), 4u);
  EXPECT_TRUE(std::all_of(v.begin(), v.end(), [](double x) { return x == 0; }));
}

TEST(ParseEmbeddingsTest, DimensionMismatchNamesLine) {
  try {
    ParseEmbeddings("a 1 0 0 0\nb 0 1 0 0\nc 1 2 3\n", "vec.txt");
    FAIL();
  } catch (const InputError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.path(), "vec.txt");
  }
}

TEST(ParseEmbeddingsTest, BadNumberAndEmptyFile) {
  EXPECT_THROW(ParseEmbeddings("a 1 x 0\n"), InputError);
  EXPECT_THROW(ParseEmbeddings(""), InputError);
  EXPECT_THROW(ParseEmbeddings("\n\n"), InputError);
}

TEST(ParseEmbeddingsTest, FirstOccurrenceWins) {
  EmbeddingStore e = ParseEmbeddings("a 1 0\na 0 1\n");
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e.Lookup("a")[0], 1.0);
}

TEST(EmbeddingStoreTest, LowercaseFallback) {
  EmbeddingStore e = ParseEmbeddings("acquired 1 0\nApple 0 1\n");
  EXPECT_EQ(e.Lookup("Acquired")[0], 1.0);
  EXPECT_EQ(e.Lookup("Apple")[1], 1.0);
  EXPECT_EQ(e.Lookup("apple")[1], 0.0);
}

TEST(EmbeddingStoreTest, AddRejectsWrongDimension) {
  EmbeddingStore e(3);
  EXPECT_THROW(e.Add("x", {1.0, 2.0}), std::invalid_argument);
}

TEST(ContextVectorTest, NormalisedSumSkippingUnknownWords) {
  EmbeddingStore e = ParseEmbeddings("merger 3 0\nwith 0 4\n");
  std::vector<std::string> tokens = {"merger", "zzz", "with"};
  Vector v = ContextVector(tokens, e);
  EXPECT_DOUBLE_EQ(v[0], 0.6);
  EXPECT_DOUBLE_EQ(v[1], 0.8);
}

TEST(ContextVectorTest, EmptyAndUnknownWindowsAreZero) {
  EmbeddingStore e = ParseEmbeddings("a 1 0\n");
  std::vector<std::string> none;
  std::vector<std::string> oov = {"q", "r"};
  EXPECT_EQ(ContextVector(none, e), Vector(2, 0.0));
  EXPECT_EQ(ContextVector(oov, e), Vector(2, 0.0));
}

TEST(ContextVectorTest, PermutationsAreBitIdentical) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  EmbeddingStore e(16);
  std::vector<std::string> words;
  for (int k = 0; k < 12; ++k) {
    Vector v(16);
    for (double &x : v) x = g(rng);
    words.push_back("w" + std::to_string(k));
    e.Add(words.back(), v);
  }
  Vector ref = ContextVector(words, e);
  for (int t = 0; t < 50; ++t) {
    std::shuffle(words.begin(), words.end(), rng);
    EXPECT_EQ(ContextVector(words, e), ref);
  }
  double norm = 0.0;
  for (double x : ref) norm += x * x;
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

}  // namespace
}  // namespace brex
