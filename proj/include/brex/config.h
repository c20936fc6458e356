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

#ifndef BREX_CONFIG_H_
#define BREX_CONFIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "brex/corpus.h"
#include "brex/similarity.h"
#include "brex/types.h"

namespace brex {

// Seed type the bootstrapper works from: entity pairs, templates or both.
enum class Mode { kBree, kBret, kBrej };

// Which seed state extractor reliability is measured against.
enum class ScoreAgainst { kYield, kOriginal };

struct RunConfig {
  Mode mode = Mode::kBrej;
  SimilarityMeasure measure;
  double tau_sim = 0.7;
  double tau_cnf = 0.7;
  double w_neg = 0.5;
  double w_unknown = 0.0001;
  int iterations = 3;
  Pairing pairing = Pairing::kOrdered;
  WindowLimits limits;
  double output_threshold = 0.5;
  ScoreAgainst score_against = ScoreAgainst::kYield;
  bool reorder_passive = true;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Throws UsageError naming the offending field.
void ValidateConfig(const RunConfig &cfg);

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);
std::string_view PairingName(Pairing pairing);
std::optional<Pairing> ParsePairing(std::string_view name);
std::string_view ScoreAgainstName(ScoreAgainst s);
std::optional<ScoreAgainst> ParseScoreAgainst(std::string_view name);

inline bool UsesPairs(Mode mode) { return mode != Mode::kBret; }
inline bool UsesTemplates(Mode mode) { return mode != Mode::kBree; }

}  // namespace brex

#endif  // BREX_CONFIG_H_
