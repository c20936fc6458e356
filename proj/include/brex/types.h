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

#ifndef BREX_TYPES_H_
#define BREX_TYPES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace brex {

using Vector = std::vector<double>;

// Whether (e1, e2) matching respects argument order.
enum class Pairing { kOrdered, kBiset };

struct TypedEntity {
  std::string surface;
  std::string type;

  bool operator==(const TypedEntity &other) const = default;
};

struct TypePair {
  std::string first;
  std::string second;

  TypePair Swapped() const { return {second, first}; }
  bool operator==(const TypePair &other) const = default;
};

struct EntityPair {
  TypedEntity e1;
  TypedEntity e2;

  TypePair types() const { return {e1.type, e2.type}; }
  EntityPair Swapped() const { return {e2, e1}; }
};

// Canonical lookup key for a pair. Surfaces are compared case-insensitively.
// Under biset pairing the two sides are sorted so the key is symmetric. When
// with_types is false only surfaces take part (gold files carry no types).
std::string PairKey(const EntityPair &pair, Pairing pairing,
                    bool with_types = true);

// Equality of two pairs under the given pairing mode.
bool SamePair(const EntityPair &a, const EntityPair &b, Pairing pairing);

// The context-vector triple of a sentence (or of a seed template) plus the
// entity-type pair it was observed with.
struct Template {
  Vector before;
  Vector between;
  Vector after;
  TypePair types;

  std::size_t dimension() const { return between.size(); }
};

// Half-open token span [start, end).
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool operator==(const Span &other) const = default;
};

struct Instance {
  std::size_t id = 0;
  EntityPair pair;
  Template context;
  std::size_t sentence_ref = 0;
  Span e1_span;
  Span e2_span;
  std::vector<std::string> tokens_before;
  std::vector<std::string> tokens_between;
  std::vector<std::string> tokens_after;
  // Set once passive-voice reordering has swapped the arguments.
  bool reordered = false;
};

// Entity-pair set with pairing-mode aware membership. Iteration order is
// insertion order.
class PairSet {
 public:
  explicit PairSet(Pairing pairing = Pairing::kOrdered) : pairing_(pairing) {}

  // Returns true if the pair was not present.
  bool Insert(const EntityPair &pair);
  bool Contains(const EntityPair &pair) const;
  void Merge(const PairSet &other);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<EntityPair> &pairs() const { return pairs_; }
  Pairing pairing() const { return pairing_; }

 private:
  Pairing pairing_;
  std::vector<EntityPair> pairs_;
  std::unordered_set<std::string> keys_;
};

// Template set with exact (bitwise) deduplication. Iteration order is
// insertion order.
class TemplateSet {
 public:
  bool Insert(const Template &t);
  bool Contains(const Template &t) const;
  void Merge(const TemplateSet &other);

  std::size_t size() const { return templates_.size(); }
  bool empty() const { return templates_.empty(); }
  const std::vector<Template> &templates() const { return templates_; }

 private:
  std::vector<Template> templates_;
  std::unordered_set<std::string> keys_;
};

// The four seed sets: positive/negative entity pairs and templates.
struct SeedState {
  explicit SeedState(Pairing pairing = Pairing::kOrdered)
      : positive_pairs(pairing), negative_pairs(pairing) {}

  PairSet positive_pairs;
  PairSet negative_pairs;
  TemplateSet positive_templates;
  TemplateSet negative_templates;

  // Component-wise union.
  void Merge(const SeedState &other);
};

}  // namespace brex

#endif  // BREX_TYPES_H_
