// Copyright 2026 The convseg Authors.
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

#ifndef CONVSEG_ERROR_HPP_
#define CONVSEG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convseg {

// Error categories. The numeric values of the first group double as CLI exit
// codes.
enum class ErrorKind {
  kIo = 1,
  kFormat = 2,
  kEmpty = 3,
  kMismatch = 4,
  kInvalidArgument = 5,
  kTransport = 10,
  kMalformedResponse = 11,
  kCountMismatch = 12,
  kProbabilityRange = 13,
  kScorerRejected = 14,
  kNumeric = 20,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A malformed input record; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::kFormat, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Maps an error to the exit code contract of the command-line tool:
// 0 success, 1 I/O, 2 usage/format, 3 empty result, 4 mismatch.
inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kTransport:
      return 1;
    case ErrorKind::kEmpty:
      return 3;
    case ErrorKind::kMismatch:
      return 4;
    default:
      return 2;
  }
}

}  // namespace convseg

#endif  // CONVSEG_ERROR_HPP_
