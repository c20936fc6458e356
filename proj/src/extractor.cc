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

#include "brex/extractor.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace brex {

std::string ExtractorSignature(const Extractor &e) {
  std::vector<std::size_t> ids;
  ids.reserve(e.members.size());
  for (const Instance *m : e.members) ids.push_back(m->id);
  std::sort(ids.begin(), ids.end());
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t id : ids) {
    std::uint64_t v = id;
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace brex
