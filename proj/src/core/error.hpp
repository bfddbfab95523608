// Copyright 2026 The sgeo Authors
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

#ifndef SGEO_CORE_ERROR_HPP_
#define SGEO_CORE_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sgeo {

// Values mirror sgeo_status in the C API header.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParseError = 2,
  kSelfLoop = 3,
  kDuplicateEdge = 4,
  kUnreachablePair = 5,
  kDisconnected = 6,
  kMalformedPath = 7,
  kDiameterTooLarge = 8,
  kNotSplit = 9,
  kNotBlockGraph = 10,
  kNotCactus = 11,
  kNotBipartite = 12,
  kPartTooSmall = 13,
  kClauseTooLarge = 14,
  kInvalidFormula = 15,
  kNotNormalized = 16,
  kWitnessDoesNotSatisfy = 17,
  kNotAStrongGeodeticSet = 18,
  kAlgorithmDiscrepancy = 19,
  kIo = 20,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  // 1-based input line for parse-family errors.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace sgeo

#endif  // SGEO_CORE_ERROR_HPP_
