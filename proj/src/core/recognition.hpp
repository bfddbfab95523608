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

#ifndef SGEO_CORE_RECOGNITION_HPP_
#define SGEO_CORE_RECOGNITION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/assignment.hpp"
#include "core/geodesics.hpp"
#include "core/graph.hpp"
#include "core/structure.hpp"

namespace sgeo {

enum class Verdict { kYes, kNo, kUnknown };
const char* verdict_name(Verdict v);

struct RecognitionResult {
  Verdict verdict = Verdict::kNo;
  // Present exactly when verdict is kYes.
  std::optional<Assignment> certificate;
  std::uint64_t nodes_explored = 0;
  std::vector<std::string> diagnostics;
};

// Exact backtracking over pair geodesics. Pairs are processed in ascending
// (geodesic count, u, v) order. With a node budget the search may stop early
// and report kUnknown; without one it always decides.
RecognitionResult recognize_general(const Graph& g, const VertexSet& s,
                                    std::optional<std::uint64_t> budget = std::nullopt);
RecognitionResult recognize_general(const GeodesicIndex& index, const VertexSet& s,
                                    std::optional<std::uint64_t> budget = std::nullopt);

// Matching on the auxiliary pair/vertex bipartite graph. Requires diam(g) <= 2.
RecognitionResult recognize_diameter2(const Graph& g, const VertexSet& s);

// Matching with two pair vertices for every distance-3 pair.
RecognitionResult recognize_split(const Graph& g, const VertexSet& s);
RecognitionResult recognize_split(const Graph& g, const VertexSet& s,
                                  const SplitPartition& partition);

// YES iff every simplicial vertex is in s.
RecognitionResult recognize_block(const Graph& g, const VertexSet& s);

// Adds a pendant to every vertex of s and compares the cactus solver's optimum with |s|.
RecognitionResult recognize_cactus(const Graph& g, const VertexSet& s);

enum class Recognizer { kAuto, kGeneral, kDiameter2, kSplit, kBlock, kCactus };
const char* recognizer_name(Recognizer r);

// kAuto prefers block, diameter-2, split, cactus, then the general search.
// `used` receives the recognizer that actually ran.
RecognitionResult recognize(const Graph& g, const VertexSet& s, Recognizer algorithm,
                            std::optional<std::uint64_t> budget = std::nullopt,
                            Recognizer* used = nullptr);

nlohmann::json recognition_to_json(const RecognitionResult& r, const VertexSet& s);

// Number of auxiliary pair vertices built by the last matching recognizer call
// on this thread; exposed for size assertions in tests.
std::size_t last_auxiliary_pair_count();

}  // namespace sgeo

#endif  // SGEO_CORE_RECOGNITION_HPP_
