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

#include "brex/error.h"

namespace brex {

InputError::InputError(const std::string &path, std::size_t line,
                       const std::string &what)
    : std::runtime_error(
          path + (line > 0 ? ":" + std::to_string(line) : std::string()) +
          ": " + what),
      path_(path),
      line_(line) {}

}  // namespace brex
