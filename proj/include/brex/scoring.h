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

#ifndef BREX_SCORING_H_
#define BREX_SCORING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "brex/config.h"
#include "brex/extractor.h"
#include "brex/types.h"

namespace brex {

// Members of `e` that hit the given seed sets, counted per mode: members
// whose pair is in `pairs` (BREE), members within tau_sim of `templates`
// (BRET), or the sum of both (BREJ; a member hitting both counts twice).
double CountPositives(const Extractor &e, const PairSet &pairs,
                      const TemplateSet &templates, const RunConfig &cfg);

// Members whose pair is in neither the positive nor the negative pair set.
std::size_t CountUnknown(const Extractor &e, const SeedState &seeds);

// Reliability from raw counts: p / (p + w_n n + w_u u), which is
// 1 / (1 + w_n n/p + w_u u/p). Zero when p == 0.
double ConfidenceFromCounts(double p, double n, double u, double w_neg,
                            double w_unknown);

// Fills n_pos, n_neg, n_unknown and confidence of `e` against `seeds` and
// returns the confidence.
double ScoreExtractor(Extractor &e, const SeedState &seeds,
                      const RunConfig &cfg);

// Reliability of `e` without mutating it.
double ExtractorConfidence(const Extractor &e, const SeedState &seeds,
                           const RunConfig &cfg);

// cnf(lambda) * sim(i, lambda), using the extractor's stored confidence.
double InstanceClusterConfidence(const Instance &i, const Extractor &e,
                                 const RunConfig &cfg);

// 1 - prod(1 - c_k) over the given per-extractor confidences.
double CombineConfidences(std::span<const double> per_extractor);

// Noisy-or over the extractors whose psi covers `i` (sim >= tau_sim). Uses
// stored extractor confidences. Zero when nothing covers `i`.
double InstanceConfidence(const Instance &i,
                          std::span<const Extractor> extractors,
                          const RunConfig &cfg);

enum class ExtractorCategory { kNnhc, kNnlc, kNhc, kNlc };

std::string_view CategoryName(ExtractorCategory c);

// Crosses an external noisiness label with the tau_cnf split. No label, no
// category.
std::optional<ExtractorCategory> CategorizeExtractor(
    const Extractor &e, std::optional<bool> noisy, const RunConfig &cfg);

}  // namespace brex

#endif  // BREX_SCORING_H_
