// Copyright 2026 The eznet Authors.
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

#ifndef EZNET_ERROR_H_
#define EZNET_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eznet {

// Raised when an operation is applied outside its mathematical domain
// (too few nodes, empty graph, invalid model parameters, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the text readers. line() is 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::int64_t line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}

  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

}  // namespace eznet

#endif  // EZNET_ERROR_H_
