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

#ifndef BREX_ERROR_H_
#define BREX_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brex {

// Malformed or unreadable input file. Carries the 1-based line number when
// the problem is tied to a line (0 otherwise).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string &path, std::size_t line,
             const std::string &what);

  const std::string &path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// Invalid configuration or command-line usage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace brex

#endif  // BREX_ERROR_H_
