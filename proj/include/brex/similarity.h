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

#ifndef BREX_SIMILARITY_H_
#define BREX_SIMILARITY_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brex/types.h"

namespace brex {

enum class SimilarityKind { kMatch, kCcAsym, kCcSym1, kCcSym2 };

// Context-similarity measure. `weights` (before, between, after) are only
// consulted by kMatch and must be nonnegative and sum to 1.
struct SimilarityMeasure {
  SimilarityKind kind = SimilarityKind::kCcAsym;
  std::array<double, 3> weights = {0.2, 0.6, 0.2};
};

// Throws UsageError if the weights are negative or do not sum to 1.
void ValidateMeasure(const SimilarityMeasure &m);

// "match", "cc-asym", "cc-sym1", "cc-sym2".
std::string_view KindName(SimilarityKind kind);
std::optional<SimilarityKind> ParseKind(std::string_view name);

// Similarity of two context triples, clamped to [0, 1]. Zero when the type
// pairs differ. Throws std::logic_error on a dimension mismatch.
//
//   match   : sum_p w_p v_p(i).v_p(j)
//   cc-asym : max_p v_p(i).v_0(j)
//   cc-sym1 : max(cc-asym(i,j), cc-asym(j,i))
//   cc-sym2 : max((v_-1(i)+v_1(i)).v_0(j), (v_-1(j)+v_1(j)).v_0(i),
//                 v_0(i).v_0(j))
double SimTemplates(const Template &i, const Template &j,
                    const SimilarityMeasure &m);

// Same as SimTemplates without the clamp; negative dot products survive.
double RawSimTemplates(const Template &i, const Template &j,
                       const SimilarityMeasure &m);

inline double SimInstances(const Instance &i, const Instance &j,
                           const SimilarityMeasure &m) {
  return SimTemplates(i.context, j.context, m);
}

// Max similarity of `i` to any member. Throws std::invalid_argument on an
// empty member list.
double SimInstanceCluster(const Instance &i,
                          std::span<const Instance *const> members,
                          const SimilarityMeasure &m);

// Max similarity of `i` to any template; 0 for the empty set.
double SimInstanceTemplateSet(const Instance &i,
                              std::span<const Template> templates,
                              const SimilarityMeasure &m);

}  // namespace brex

#endif  // BREX_SIMILARITY_H_
