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

#include "core/error.hpp"

namespace sgeo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kUnreachablePair: return "UnreachablePair";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kMalformedPath: return "MalformedPath";
    case ErrorCode::kDiameterTooLarge: return "DiameterTooLarge";
    case ErrorCode::kNotSplit: return "NotSplit";
    case ErrorCode::kNotBlockGraph: return "NotBlockGraph";
    case ErrorCode::kNotCactus: return "NotCactus";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kPartTooSmall: return "PartTooSmall";
    case ErrorCode::kClauseTooLarge: return "ClauseTooLarge";
    case ErrorCode::kInvalidFormula: return "InvalidFormula";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kWitnessDoesNotSatisfy: return "WitnessDoesNotSatisfy";
    case ErrorCode::kNotAStrongGeodeticSet: return "NotAStrongGeodeticSet";
    case ErrorCode::kAlgorithmDiscrepancy: return "AlgorithmDiscrepancy";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace sgeo
