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

#ifndef BREX_EXTRACTOR_H_
#define BREX_EXTRACTOR_H_

#include <cstddef>
#include <string>
#include <vector>

#include "brex/types.h"

namespace brex {

// A cluster of instances acting as an extraction pattern. Members point into
// the instance collection the extractor was built from, which must outlive
// it.
struct Extractor {
  std::size_t id = 0;
  std::vector<const Instance *> members;
  double n_pos = 0.0;
  double n_neg = 0.0;
  std::size_t n_unknown = 0;
  double confidence = 0.0;

  std::size_t size() const { return members.size(); }
};

// Stable identity of an extractor: FNV-1a over its sorted member ids, as 16
// hex digits. Used to key noisiness annotations.
std::string ExtractorSignature(const Extractor &e);

}  // namespace brex

#endif  // BREX_EXTRACTOR_H_
