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

#include <algorithm>

#include "brex/similarity.h"

namespace brex {

double CountPositives(const Extractor &e, const PairSet &pairs,
                      const TemplateSet &templates, const RunConfig &cfg) {
  double count = 0.0;
  for (const Instance *m : e.members) {
    if (UsesPairs(cfg.mode) && pairs.Contains(m->pair)) count += 1.0;
    if (UsesTemplates(cfg.mode) &&
        SimInstanceTemplateSet(*m, templates.templates(), cfg.measure) >=
            cfg.tau_sim) {
      count += 1.0;
    }
  }
  return count;
}

std::size_t CountUnknown(const Extractor &e, const SeedState &seeds) {
  std::size_t count = 0;
  for (const Instance *m : e.members) {
    if (!seeds.positive_pairs.Contains(m->pair) &&
        !seeds.negative_pairs.Contains(m->pair)) {
      ++count;
    }
  }
  return count;
}

double ConfidenceFromCounts(double p, double n, double u, double w_neg,
                            double w_unknown) {
  if (p <= 0.0) return 0.0;
  return p / (p + w_neg * n + w_unknown * u);
}

double ScoreExtractor(Extractor &e, const SeedState &seeds,
                      const RunConfig &cfg) {
  e.n_pos = CountPositives(e, seeds.positive_pairs, seeds.positive_templates,
                           cfg);
  e.n_neg = CountPositives(e, seeds.negative_pairs, seeds.negative_templates,
                           cfg);
  e.n_unknown = CountUnknown(e, seeds);
  e.confidence = ConfidenceFromCounts(e.n_pos, e.n_neg,
                                      static_cast<double>(e.n_unknown),
                                      cfg.w_neg, cfg.w_unknown);
  return e.confidence;
}

double ExtractorConfidence(const Extractor &e, const SeedState &seeds,
                           const RunConfig &cfg) {
  Extractor copy = e;
  return ScoreExtractor(copy, seeds, cfg);
}

double InstanceClusterConfidence(const Instance &i, const Extractor &e,
                                 const RunConfig &cfg) {
  return e.confidence * SimInstanceCluster(i, e.members, cfg.measure);
}

double CombineConfidences(std::span<const double> per_extractor) {
  double miss = 1.0;
  for (double c : per_extractor) miss *= 1.0 - c;
  return 1.0 - miss;
}

double InstanceConfidence(const Instance &i,
                          std::span<const Extractor> extractors,
                          const RunConfig &cfg) {
  std::vector<double> covering;
  for (const Extractor &e : extractors) {
    double sim = SimInstanceCluster(i, e.members, cfg.measure);
    if (sim >= cfg.tau_sim) covering.push_back(e.confidence * sim);
  }
  return CombineConfidences(covering);
}

std::string_view CategoryName(ExtractorCategory c) {
  switch (c) {
    case ExtractorCategory::kNnhc:
      return "NNHC";
    case ExtractorCategory::kNnlc:
      return "NNLC";
    case ExtractorCategory::kNhc:
      return "NHC";
    case ExtractorCategory::kNlc:
      return "NLC";
  }
  return "?";
}

std::optional<ExtractorCategory> CategorizeExtractor(
    const Extractor &e, std::optional<bool> noisy, const RunConfig &cfg) {
  if (!noisy.has_value()) return std::nullopt;
  const bool high = e.confidence >= cfg.tau_cnf;
  if (!*noisy) return high ? ExtractorCategory::kNnhc : ExtractorCategory::kNnlc;
  return high ? ExtractorCategory::kNhc : ExtractorCategory::kNlc;
}

}  // namespace brex
