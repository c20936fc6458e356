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

#ifndef BREX_EVALUATE_H_
#define BREX_EVALUATE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brex/config.h"
#include "brex/engine.h"
#include "brex/extractor.h"
#include "brex/types.h"

namespace brex {

// Flat list of true pairs for one relation. Surfaces only; matching is
// case-insensitive and follows the pairing mode.
class GoldKB {
 public:
  GoldKB(std::string relation, Pairing pairing);

  void Add(const std::string &e1, const std::string &e2);
  bool Contains(const EntityPair &pair) const;

  const std::string &relation() const { return relation_; }
  std::size_t size() const { return keys_.size(); }
  Pairing pairing() const { return pairing_; }

 private:
  std::string relation_;
  Pairing pairing_;
  std::map<std::string, std::size_t> keys_;
};

// One "e1<TAB>e2" pair per line; blank lines and lines starting with '#'
// are skipped.
GoldKB LoadGold(const std::string &path, Pairing pairing,
                const std::string &relation = "");
GoldKB ParseGold(std::string_view text, Pairing pairing,
                 const std::string &relation = "",
                 const std::string &origin = "<memory>");

struct ScoredPair {
  EntityPair pair;
  double confidence = 0.0;
};

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t out_count = 0;
  std::size_t correct = 0;
};

// Pair-level scores over the extractions with confidence >= threshold.
// Pairs are deduplicated before counting. Throws std::invalid_argument on an
// empty gold set.
PrecisionRecall Prf1(std::span<const ScoredPair> extracted, const GoldKB &gold,
                     double threshold = 0.5);
PrecisionRecall Prf1(std::span<const AcceptedInstance> accepted,
                     const GoldKB &gold, double threshold = 0.5);

struct HitCount {
  std::size_t by_pair = 0;
  std::size_t by_template = 0;
  std::size_t either = 0;
};

// Instances matching the positive pair seeds, the positive template seeds
// (similarity >= tau_sim), or either. Independent of cfg.mode.
HitCount CountHits(std::span<const Instance> gamma, const SeedState &seeds,
                   const RunConfig &cfg);

// The per-extractor quantities the analytics need; decoupled from live
// instances so a saved extractor dump can be analysed.
struct ExtractorSummary {
  std::string signature;
  std::size_t size = 0;
  double n_pos = 0.0;
  double n_neg = 0.0;
  double confidence = 0.0;
};

ExtractorSummary Summarize(const Extractor &e);

struct ExtractorStats {
  std::size_t count = 0;
  double aie = 0.0;  // mean member count
  double aes = 0.0;  // mean confidence
  // Label-dependent fractions, over labeled extractors.
  std::optional<double> ane;
  std::optional<double> anne;
  std::optional<double> annlc;  // non-noisy with confidence < 0.5
  double ap = 0.0;  // mean positives
  double an = 0.0;  // mean negatives
  std::optional<double> anp;  // an / ap, absent when ap == 0
};

// Noisy flag keyed by extractor signature.
using NoiseLabels = std::map<std::string, bool>;

ExtractorStats ComputeExtractorStats(std::span<const ExtractorSummary> summaries,
                                     const NoiseLabels *labels);
ExtractorStats ComputeExtractorStats(std::span<const Extractor> extractors,
                                     const NoiseLabels *labels);

// "signature<TAB>noisy" per line, noisy being 1/0, true/false or
// noisy/clean.
NoiseLabels LoadNoiseLabels(const std::string &path);

}  // namespace brex

#endif  // BREX_EVALUATE_H_
