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

#ifndef BREX_CORPUS_H_
#define BREX_CORPUS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brex/embeddings.h"
#include "brex/types.h"

namespace brex {

struct EntityMention {
  Span span;
  std::string type;
};

struct TaggedSentence {
  // 1-based line number of the record in the corpus file.
  std::size_t ref = 0;
  std::vector<std::string> tokens;
  std::vector<EntityMention> entities;
  // Empty when the record carries no POS tags.
  std::vector<std::string> pos;
};

struct CorpusLoad {
  std::vector<TaggedSentence> sentences;
  // Entities whose type is outside the configured vocabulary.
  std::size_t dropped_entities = 0;
  // Records rejected for overlapping entity spans.
  std::size_t rejected_records = 0;
};

// Reads line-delimited JSON records
//   {"tokens": [...], "entities": [{"start", "end", "type"}], "pos": [...]}
// Malformed records and out-of-range spans throw InputError naming the line.
CorpusLoad LoadCorpus(const std::string &path,
                      const std::set<std::string> &type_vocab);
CorpusLoad ParseCorpus(std::string_view text,
                       const std::set<std::string> &type_vocab,
                       const std::string &origin = "<memory>");

// Maximum tokens kept in the before, between and after windows.
struct WindowLimits {
  int max_before = 2;
  int max_between = 6;
  int max_after = 2;
};

struct ExtractionResult {
  std::vector<Instance> instances;
  // Type-matching pairs whose between window exceeds max_between.
  std::size_t skipped = 0;
};

// One instance per left-to-right entity pair whose types equal `types` and
// whose gap is at most limits.max_between tokens. Instance ids are assigned
// in output order starting at 0.
ExtractionResult ExtractInstances(std::span<const TaggedSentence> sentences,
                                  const EmbeddingStore &emb,
                                  const WindowLimits &limits,
                                  const TypePair &types);

// Swaps the arguments of an instance whose between context reads as a
// passive construction: the last three between tokens are a form of "to be",
// a verb tagged VBD or VBN, and "by". `pos` is the tag sequence of the whole
// sentence; without tags, or once reordered, the instance is returned as is.
Instance ReorderPassive(const Instance &instance,
                        std::span<const std::string> pos);

// Parses "[X] acquire [Y]" style strings into templates. Words before [X],
// between the slots and after [Y] fill the three windows.
Template ParseSeedTemplate(std::string_view raw, const EmbeddingStore &emb,
                           const TypePair &types);
std::vector<Template> ParseSeedTemplates(std::span<const std::string> raw,
                                         const EmbeddingStore &emb,
                                         const TypePair &types);

// Contents of a seed file, before templates are embedded.
struct SeedSpec {
  std::string relation;
  TypePair types;
  std::vector<std::pair<std::string, std::string>> positive_pairs;
  std::vector<std::pair<std::string, std::string>> negative_pairs;
  std::vector<std::string> positive_templates;
  std::vector<std::string> negative_templates;
};

// JSON object with keys relation, type_pair, positive_pairs, negative_pairs,
// positive_templates, negative_templates.
SeedSpec LoadSeedSpec(const std::string &path);
SeedSpec ParseSeedSpec(std::string_view text,
                       const std::string &origin = "<memory>");

SeedState BuildSeedState(const SeedSpec &spec, const EmbeddingStore &emb,
                         Pairing pairing);

}  // namespace brex

#endif  // BREX_CORPUS_H_
