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

// Small named graphs and formulas shared by the test binaries.

#ifndef SGEO_TESTS_SUPPORT_FIXTURES_HPP_
#define SGEO_TESTS_SUPPORT_FIXTURES_HPP_

#include <initializer_list>
#include <optional>
#include <vector>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/reductions.hpp"

namespace sgeo::fixtures {

inline Graph make(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

// The error code thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline VertexSet set_of(std::initializer_list<Vertex> vs) { return VertexSet(vs); }

// Two triangles sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// Triangle 0,1,2 with pendant 3 on vertex 0.
inline Graph paw() { return make(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

// 3-cube, vertices as bit patterns.
inline Graph cube() {
  std::vector<Edge> e;
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex b = 1; b < 8; b <<= 1) {
      if (v < (v ^ b)) e.emplace_back(v, v ^ b);
    }
  }
  return Graph::from_edges(8, e);
}

// (x1 or not x2)(x1 or x2)(not x1 or not x2); satisfied only by x1=T, x2=F.
inline Sat3Formula figure1_formula() { return Sat3Formula{2, {{1, -2}, {1, 2}, {-1, -2}}}; }

// (x1 or x2)(not x1 or not x2).
inline Sat3Formula figure2_formula() { return Sat3Formula{2, {{1, 2}, {-1, -2}}}; }

// Split graph with clique {4,5,6} and independent set {0,1,2,3}.
inline Graph figure3_split() {
  return make(7, {{4, 5}, {5, 6}, {4, 6}, {0, 4}, {0, 6}, {1, 4}, {2, 5}, {3, 5}, {3, 6}});
}

}  // namespace sgeo::fixtures

#endif  // SGEO_TESTS_SUPPORT_FIXTURES_HPP_
