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

#ifndef BREX_TESTS_SUPPORT_PLANTED_CORPUS_H_
#define BREX_TESTS_SUPPORT_PLANTED_CORPUS_H_

#include <string>
#include <utility>
#include <vector>

namespace brex::testing {

// Files of a generated fixture.
struct PlantedFixture {
  std::string corpus;
  std::string embeddings;
  std::string seeds;
  std::string gold;
  // The ten planted relation pairs (seed pairs excluded).
  std::vector<std::pair<std::string, std::string>> planted;
  std::vector<std::pair<std::string, std::string>> seed_pairs;
  std::size_t sentences = 0;
};

// Writes an ~200 sentence ORG-ORG acquisition corpus with toy 8-d
// embeddings into `dir`.
//
// Relation words fall into five paraphrase clusters centred on
// unit(e0 + e_k), k = 1..5: cosine >= 0.99 inside a cluster, <= 0.61
// across. Distractor verbs live near e6/e7 (cosine <= 0.3 with any
// relation word); function words are out of vocabulary. Each cluster
// carries two planted pairs. The seeds are two pairs seen only with
// cluster-1 verbs and the templates "[X] acquire [Y]" (cluster 1) and
// "[X] takeover [Y]" (cluster 3). Three bridge sentences put a cluster
// word in the before window and another cluster's word between the
// entities (1 -> 2, 3 -> 4, 4 -> 5), so template growth can walk from
// the seeds to every cluster while pair seeds alone reach only 1 and 2.
// The gold file lists the planted and the seed pairs.
PlantedFixture WritePlantedCorpus(const std::string &dir);

// Two sentences holding the seed pair (Alpha, Beta) only in reversed
// order, for the pairing ablation. `planted` holds the reversed pair.
PlantedFixture WriteReversedPairFixture(const std::string &dir);

}  // namespace brex::testing

#endif  // BREX_TESTS_SUPPORT_PLANTED_CORPUS_H_
