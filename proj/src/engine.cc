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

#include "brex/engine.h"

#include <algorithm>
#include <limits>
#include <map>

#include "brex/scoring.h"
#include "brex/similarity.h"
#include "parallel.h"

namespace brex {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool PassesCheck(const Instance &i, double confidence, const SeedState &seeds,
                 const RunConfig &cfg) {
  if (confidence < cfg.tau_cnf) return false;
  if (cfg.mode == Mode::kBrej) {
    return SimInstanceTemplateSet(i, seeds.positive_templates.templates(),
                                  cfg.measure) >= cfg.tau_sim;
  }
  return true;
}

}  // namespace

bool MatchInstance(const Instance &i, const SeedState &seeds,
                   const RunConfig &cfg) {
  if (UsesPairs(cfg.mode) && seeds.positive_pairs.Contains(i.pair)) {
    return true;
  }
  if (UsesTemplates(cfg.mode)) {
    return SimInstanceTemplateSet(i, seeds.positive_templates.templates(),
                                  cfg.measure) >= cfg.tau_sim;
  }
  return false;
}

std::vector<Extractor> ClusterHop1(std::span<const Instance *const> hits,
                                   const RunConfig &cfg) {
  std::vector<Extractor> clusters;
  for (const Instance *hit : hits) {
    Extractor *home = nullptr;
    for (Extractor &c : clusters) {
      if (SimInstanceCluster(*hit, c.members, cfg.measure) >= cfg.tau_sim) {
        home = &c;
        break;
      }
    }
    if (home == nullptr) {
      clusters.emplace_back();
      clusters.back().id = clusters.size() - 1;
      home = &clusters.back();
    }
    home->members.push_back(hit);
  }
  return clusters;
}

std::vector<Extractor> GrowHop2(const std::vector<Extractor> &theta,
                                std::span<const Instance> gamma,
                                const RunConfig &cfg) {
  std::vector<Extractor> lambda = theta;
  if (theta.empty()) return lambda;

  std::map<const Instance *, std::size_t> placed;
  for (const Extractor &c : theta) {
    for (const Instance *m : c.members) placed.emplace(m, c.id);
  }
  // Closest hop-1 cluster per instance, computed against the frozen theta.
  std::vector<std::size_t> target(gamma.size(), kNone);
  internal::ParallelFor(gamma.size(), cfg.threads, [&](std::size_t k) {
    const Instance &i = gamma[k];
    if (placed.count(&i) > 0) return;
    double best = -1.0;
    std::size_t arg = kNone;
    for (std::size_t c = 0; c < theta.size(); ++c) {
      double sim = SimInstanceCluster(i, theta[c].members, cfg.measure);
      if (sim > best) {
        best = sim;
        arg = c;
      }
    }
    if (best >= cfg.tau_sim) target[k] = arg;
  });
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (target[k] != kNone) lambda[target[k]].members.push_back(&gamma[k]);
  }
  return lambda;
}

std::vector<Candidate> ExpandHop3(const Extractor &e,
                                  std::span<const Instance> gamma,
                                  const RunConfig &cfg) {
  std::vector<double> sims(gamma.size(), 0.0);
  internal::ParallelFor(gamma.size(), cfg.threads, [&](std::size_t k) {
    sims[k] = SimInstanceCluster(gamma[k], e.members, cfg.measure);
  });
  std::vector<Candidate> out;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (sims[k] >= cfg.tau_sim) out.push_back({k, sims[k]});
  }
  return out;
}

CheckResult CheckInstance(const Instance &i,
                          std::span<const Extractor> extractors,
                          const SeedState &seeds, const RunConfig &cfg) {
  CheckResult r;
  r.confidence = InstanceConfidence(i, extractors, cfg);
  r.accepted = PassesCheck(i, r.confidence, seeds, cfg);
  return r;
}

void AddToCache(const Instance &i, SeedState &cache, const RunConfig &cfg) {
  if (UsesPairs(cfg.mode)) cache.positive_pairs.Insert(i.pair);
  if (UsesTemplates(cfg.mode)) cache.positive_templates.Insert(i.context);
}

BootstrapResult Bootstrap(std::span<const Instance> gamma,
                          const SeedState &seeds, const RunConfig &cfg) {
  BootstrapResult result;
  result.yield_state = seeds;
  std::map<std::size_t, AcceptedInstance> accepted;

  for (int it = 1; it <= cfg.iterations; ++it) {
    IterationStats stats;
    stats.iteration = it;
    SeedState cache(cfg.pairing);
    const SeedState &yield = result.yield_state;

    std::vector<char> is_hit(gamma.size(), 0);
    internal::ParallelFor(gamma.size(), cfg.threads, [&](std::size_t k) {
      is_hit[k] = MatchInstance(gamma[k], yield, cfg) ? 1 : 0;
    });
    std::vector<const Instance *> hits;
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      if (is_hit[k]) hits.push_back(&gamma[k]);
    }
    stats.hits = hits.size();
    if (hits.empty() && it == 1) {
      result.diagnostic = "seeds never matched any instance";
    }

    std::vector<Extractor> theta = ClusterHop1(hits, cfg);
    stats.clusters = theta.size();
    std::vector<Extractor> lambda = GrowHop2(theta, gamma, cfg);
    stats.extractors = lambda.size();
    const SeedState &reference =
        cfg.score_against == ScoreAgainst::kYield ? yield : seeds;
    for (Extractor &e : lambda) ScoreExtractor(e, reference, cfg);

    // Per-instance confidences cnf(i, lambda) over the covering extractors,
    // in extractor order.
    std::vector<std::vector<double>> covering(gamma.size());
    for (const Extractor &e : lambda) {
      for (const Candidate &c : ExpandHop3(e, gamma, cfg)) {
        covering[c.index].push_back(e.confidence * c.sim);
      }
    }

    std::vector<CheckResult> checks(gamma.size());
    internal::ParallelFor(gamma.size(), cfg.threads, [&](std::size_t k) {
      if (covering[k].empty()) return;
      checks[k].confidence = CombineConfidences(covering[k]);
      checks[k].accepted =
          PassesCheck(gamma[k], checks[k].confidence, yield, cfg);
    });
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      if (covering[k].empty()) continue;
      ++stats.candidates;
      if (!checks[k].accepted) continue;
      ++stats.accepted;
      AddToCache(gamma[k], cache, cfg);
      accepted[k] = {&gamma[k], checks[k].confidence, it};
    }

    result.yield_state.Merge(cache);
    stats.yield_pairs = result.yield_state.positive_pairs.size();
    stats.yield_templates = result.yield_state.positive_templates.size();
    result.iterations.push_back(stats);
    result.extractors = std::move(lambda);
  }

  for (auto &[k, a] : accepted) result.accepted.push_back(a);
  return result;
}

}  // namespace brex
