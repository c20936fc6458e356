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

#ifndef BREX_ENGINE_H_
#define BREX_ENGINE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "brex/config.h"
#include "brex/extractor.h"
#include "brex/types.h"

namespace brex {

// Hop 1 test of a single instance against the seeds: pair membership (BREE),
// template similarity >= tau_sim (BRET), or either (BREJ).
bool MatchInstance(const Instance &i, const SeedState &seeds,
                   const RunConfig &cfg);

// Single-pass threshold clustering in input order: each hit joins the first
// cluster within tau_sim, else starts a new one. Ids are 0..k-1.
std::vector<Extractor> ClusterHop1(std::span<const Instance *const> hits,
                                   const RunConfig &cfg);

// Adds every instance of `gamma` whose best similarity to the hop-1 clusters
// reaches tau_sim to the closest cluster (lowest id on ties). Hop-1 members
// keep their place. Similarities are measured against the hop-1 members
// only.
std::vector<Extractor> GrowHop2(const std::vector<Extractor> &theta,
                                std::span<const Instance> gamma,
                                const RunConfig &cfg);

// An instance within tau_sim of an extractor, with that similarity.
struct Candidate {
  std::size_t index = 0;  // position in gamma
  double sim = 0.0;
};

// psi(lambda): every instance of gamma within tau_sim of `e`, in gamma order.
std::vector<Candidate> ExpandHop3(const Extractor &e,
                                  std::span<const Instance> gamma,
                                  const RunConfig &cfg);

struct CheckResult {
  bool accepted = false;
  double confidence = 0.0;
};

// Instance confidence against scored extractors and the acceptance test:
// confidence >= tau_cnf, plus template similarity >= tau_sim under BREJ.
CheckResult CheckInstance(const Instance &i,
                          std::span<const Extractor> extractors,
                          const SeedState &seeds, const RunConfig &cfg);

// Adds the pair (BREE), the template (BRET) or both (BREJ) to `cache`.
void AddToCache(const Instance &i, SeedState &cache, const RunConfig &cfg);

struct IterationStats {
  int iteration = 0;
  std::size_t hits = 0;
  std::size_t clusters = 0;
  std::size_t extractors = 0;
  std::size_t candidates = 0;
  std::size_t accepted = 0;
  std::size_t yield_pairs = 0;
  std::size_t yield_templates = 0;
};

struct AcceptedInstance {
  const Instance *instance = nullptr;
  double confidence = 0.0;
  int iteration = 0;
};

struct BootstrapResult {
  SeedState yield_state;
  // Extractors of the final iteration, scored.
  std::vector<Extractor> extractors;
  // One entry per accepted instance, in gamma order, carrying the
  // confidence of the last iteration that accepted it.
  std::vector<AcceptedInstance> accepted;
  std::vector<IterationStats> iterations;
  // Non-empty when something notable happened, e.g. seeds never matched.
  std::string diagnostic;
};

// Runs cfg.iterations rounds of match, cluster, grow, expand, check and add.
// `gamma` must outlive the result, which points into it.
BootstrapResult Bootstrap(std::span<const Instance> gamma,
                          const SeedState &seeds, const RunConfig &cfg);

}  // namespace brex

#endif  // BREX_ENGINE_H_
