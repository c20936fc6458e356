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

#include "brex/similarity.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "brex/embeddings.h"
#include "brex/error.h"

namespace brex {
namespace {

// a.b + c.b without materializing a + c.
double DotSum(const Vector &a, const Vector &c, const Vector &b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) sum += (a[k] + c[k]) * b[k];
  return sum;
}

double Asym(const Template &i, const Template &j) {
  return std::max({Dot(i.before, j.between), Dot(i.between, j.between),
                   Dot(i.after, j.between)});
}

void CheckDimensions(const Template &i, const Template &j) {
  const std::size_t d = i.between.size();
  if (i.before.size() != d || i.after.size() != d || j.before.size() != d ||
      j.between.size() != d || j.after.size() != d) {
    throw std::logic_error(
        "context dimension mismatch: templates built from different "
        "embedding stores");
  }
}

}  // namespace

void ValidateMeasure(const SimilarityMeasure &m) {
  for (double w : m.weights) {
    if (!(w >= 0.0)) throw UsageError("match weights must be nonnegative");
  }
  double total = m.weights[0] + m.weights[1] + m.weights[2];
  if (std::abs(total - 1.0) > 1e-9) {
    throw UsageError("match weights must sum to 1");
  }
}

std::string_view KindName(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::kMatch:
      return "match";
    case SimilarityKind::kCcAsym:
      return "cc-asym";
    case SimilarityKind::kCcSym1:
      return "cc-sym1";
    case SimilarityKind::kCcSym2:
      return "cc-sym2";
  }
  return "?";
}

std::optional<SimilarityKind> ParseKind(std::string_view name) {
  for (SimilarityKind k : {SimilarityKind::kMatch, SimilarityKind::kCcAsym,
                           SimilarityKind::kCcSym1, SimilarityKind::kCcSym2}) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

double RawSimTemplates(const Template &i, const Template &j,
                       const SimilarityMeasure &m) {
  if (!(i.types == j.types)) return 0.0;
  CheckDimensions(i, j);
  switch (m.kind) {
    case SimilarityKind::kMatch:
      return m.weights[0] * Dot(i.before, j.before) +
             m.weights[1] * Dot(i.between, j.between) +
             m.weights[2] * Dot(i.after, j.after);
    case SimilarityKind::kCcAsym:
      return Asym(i, j);
    case SimilarityKind::kCcSym1:
      return std::max(Asym(i, j), Asym(j, i));
    case SimilarityKind::kCcSym2:
      return std::max({DotSum(i.before, i.after, j.between),
                       DotSum(j.before, j.after, i.between),
                       Dot(i.between, j.between)});
  }
  return 0.0;
}

double SimTemplates(const Template &i, const Template &j,
                    const SimilarityMeasure &m) {
  return std::clamp(RawSimTemplates(i, j, m), 0.0, 1.0);
}

double SimInstanceCluster(const Instance &i,
                          std::span<const Instance *const> members,
                          const SimilarityMeasure &m) {
  if (members.empty()) {
    throw std::invalid_argument("similarity to an empty cluster");
  }
  double best = 0.0;
  for (const Instance *member : members) {
    best = std::max(best, SimInstances(i, *member, m));
  }
  return best;
}

double SimInstanceTemplateSet(const Instance &i,
                              std::span<const Template> templates,
                              const SimilarityMeasure &m) {
  double best = 0.0;
  for (const Template &t : templates) {
    best = std::max(best, SimTemplates(i.context, t, m));
  }
  return best;
}

}  // namespace brex
