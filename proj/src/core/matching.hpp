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

#ifndef SGEO_CORE_MATCHING_HPP_
#define SGEO_CORE_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sgeo {

// Edge (left index, right index) of a bipartite graph.
using BipartiteEdge = std::pair<std::uint32_t, std::uint32_t>;

inline constexpr std::uint32_t kUnmatched = static_cast<std::uint32_t>(-1);

struct Matching {
  std::vector<BipartiteEdge> pairs;  // sorted by left index
  std::vector<std::uint32_t> left_mate;
  std::vector<std::uint32_t> right_mate;

  std::size_t size() const noexcept { return pairs.size(); }
};

// Hopcroft-Karp. Neighbors are scanned in input order, so the result is a
// deterministic function of the edge list.
Matching maximum_bipartite_matching(std::size_t left, std::size_t right,
                                    std::span<const BipartiteEdge> edges);

}  // namespace sgeo

#endif  // SGEO_CORE_MATCHING_HPP_
