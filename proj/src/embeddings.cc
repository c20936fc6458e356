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

#include "brex/embeddings.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "brex/error.h"

namespace brex {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits on runs of blanks.
std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

EmbeddingStore::EmbeddingStore(std::size_t dimension)
    : dimension_(dimension), zero_(dimension, 0.0) {}

bool EmbeddingStore::Add(const std::string &word, Vector vector) {
  if (vector.size() != dimension_) {
    throw std::invalid_argument("embedding for '" + word + "' has dimension " +
                                std::to_string(vector.size()) + ", expected " +
                                std::to_string(dimension_));
  }
  return index_.emplace(word, std::move(vector)).second;
}

const Vector *EmbeddingStore::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it != index_.end()) return &it->second;
  it = index_.find(Lower(word));
  if (it != index_.end()) return &it->second;
  return nullptr;
}

std::span<const double> EmbeddingStore::Lookup(std::string_view word) const {
  const Vector *v = Find(word);
  return v != nullptr ? std::span<const double>(*v)
                      : std::span<const double>(zero_);
}

bool EmbeddingStore::Contains(std::string_view word) const {
  return Find(word) != nullptr;
}

EmbeddingStore ParseEmbeddings(std::string_view text,
                               const std::string &origin) {
  EmbeddingStore store;
  bool initialized = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::vector<std::string_view> fields = Fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2) {
      throw InputError(origin, line_no, "expected a word followed by floats");
    }
    std::size_t dim = fields.size() - 1;
    if (!initialized) {
      store = EmbeddingStore(dim);
      initialized = true;
    } else if (dim != store.dimension()) {
      throw InputError(origin, line_no,
                       "dimension mismatch: got " + std::to_string(dim) +
                           " values, expected " +
                           std::to_string(store.dimension()));
    }
    Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      std::string_view f = fields[k + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v[k]);
      if (ec != std::errc() || ptr != f.data() + f.size() ||
          !std::isfinite(v[k])) {
        throw InputError(origin, line_no,
                         "bad number '" + std::string(f) + "'");
      }
    }
    store.Add(std::string(fields[0]), std::move(v));
  }
  if (!initialized) throw InputError(origin, 0, "empty embedding file");
  return store;
}

EmbeddingStore LoadEmbeddings(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "cannot open embedding file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseEmbeddings(buffer.str(), path);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

Vector ContextVector(std::span<const std::string> tokens,
                     const EmbeddingStore &emb) {
  Vector sum(emb.dimension(), 0.0);
  std::vector<std::string> sorted(tokens.begin(), tokens.end());
  std::sort(sorted.begin(), sorted.end());
  for (const std::string &tok : sorted) {
    std::span<const double> v = emb.Lookup(tok);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k];
  }
  double norm = std::sqrt(Dot(sum, sum));
  if (norm > 0.0) {
    for (double &x : sum) x /= norm;
  }
  return sum;
}

}  // namespace brex
