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

#ifndef BREX_EMBEDDINGS_H_
#define BREX_EMBEDDINGS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "brex/types.h"

namespace brex {

// Immutable word -> vector table. Unknown words map to the zero vector.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  explicit EmbeddingStore(std::size_t dimension);

  // Adds a word unless already present (first occurrence wins). The vector
  // must have the store dimension. Returns true if inserted.
  bool Add(const std::string &word, Vector vector);

  // Exact lookup first, then the lowercased form. Unknown words yield the
  // zero vector.
  std::span<const double> Lookup(std::string_view word) const;
  bool Contains(std::string_view word) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }

 private:
  const Vector *Find(std::string_view word) const;

  std::size_t dimension_ = 0;
  std::unordered_map<std::string, Vector> index_;
  Vector zero_;
};

// Reads a GloVe-style text file: "word x1 ... xd" per line. Throws InputError
// on an empty file, an unparsable number or a line whose dimension differs
// from the first line.
EmbeddingStore LoadEmbeddings(const std::string &path);

// Same parser over an in-memory buffer; `origin` names it in errors.
EmbeddingStore ParseEmbeddings(std::string_view text,
                               const std::string &origin = "<memory>");

// Sum of the embeddings of `tokens`, scaled to unit length. Tokens are summed
// in sorted order so that equal multisets produce bit-identical vectors. An
// empty window or an all-OOV window gives the zero vector.
Vector ContextVector(std::span<const std::string> tokens,
                     const EmbeddingStore &emb);

double Dot(std::span<const double> a, std::span<const double> b);

}  // namespace brex

#endif  // BREX_EMBEDDINGS_H_
