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

#include "brex/types.h"

#include <cctype>
#include <utility>

namespace brex {
namespace {

std::string Lower(const std::string &s) {
  std::string out = s;
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string EntityKey(const TypedEntity &e, bool with_types) {
  std::string key = Lower(e.surface);
  if (with_types) {
    key += '\x1f';
    key += e.type;
  }
  return key;
}

void AppendBytes(const Vector &v, std::string *out) {
  const char *bytes = reinterpret_cast<const char *>(v.data());
  out->append(bytes, v.size() * sizeof(double));
  out->push_back('|');
}

std::string TemplateKey(const Template &t) {
  std::string key = t.types.first + '\x1f' + t.types.second + '\x1e';
  AppendBytes(t.before, &key);
  AppendBytes(t.between, &key);
  AppendBytes(t.after, &key);
  return key;
}

}  // namespace

std::string PairKey(const EntityPair &pair, Pairing pairing, bool with_types) {
  std::string a = EntityKey(pair.e1, with_types);
  std::string b = EntityKey(pair.e2, with_types);
  if (pairing == Pairing::kBiset && b < a) std::swap(a, b);
  return a + '\x1e' + b;
}

bool SamePair(const EntityPair &a, const EntityPair &b, Pairing pairing) {
  return PairKey(a, pairing) == PairKey(b, pairing);
}

bool PairSet::Insert(const EntityPair &pair) {
  if (!keys_.insert(PairKey(pair, pairing_)).second) return false;
  pairs_.push_back(pair);
  return true;
}

bool PairSet::Contains(const EntityPair &pair) const {
  return keys_.count(PairKey(pair, pairing_)) > 0;
}

void PairSet::Merge(const PairSet &other) {
  for (const EntityPair &p : other.pairs()) Insert(p);
}

bool TemplateSet::Insert(const Template &t) {
  if (!keys_.insert(TemplateKey(t)).second) return false;
  templates_.push_back(t);
  return true;
}

bool TemplateSet::Contains(const Template &t) const {
  return keys_.count(TemplateKey(t)) > 0;
}

void TemplateSet::Merge(const TemplateSet &other) {
  for (const Template &t : other.templates()) Insert(t);
}

void SeedState::Merge(const SeedState &other) {
  positive_pairs.Merge(other.positive_pairs);
  negative_pairs.Merge(other.negative_pairs);
  positive_templates.Merge(other.positive_templates);
  negative_templates.Merge(other.negative_templates);
}

}  // namespace brex
