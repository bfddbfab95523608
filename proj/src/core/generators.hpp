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

#ifndef SGEO_CORE_GENERATORS_HPP_
#define SGEO_CORE_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "core/graph.hpp"
#include "core/reductions.hpp"

namespace sgeo {

// Seeded engine; draws use plain modulo so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }
  bool chance(std::uint64_t num, std::uint64_t den) { return engine_() % den < num; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[range(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph star_graph(std::size_t leaves);

// Grows from one vertex by attaching a pendant edge or a cycle of length
// 3..6 at a uniformly chosen vertex, shortening the last cycle to hit n.
Graph random_cactus(std::size_t n, std::uint64_t seed);
// Same growth with cliques of size 2..4.
Graph random_block_graph(std::size_t n, std::uint64_t seed);
Graph random_split_graph(std::size_t n, std::uint64_t seed);
Graph random_bipartite_graph(std::size_t n, std::uint64_t seed);
// Random recursive tree plus each other edge with probability num/den.
Graph random_connected_graph(std::size_t n, std::uint64_t seed, std::uint64_t num = 1,
                             std::uint64_t den = 3);
// Normalized: each variable occurs two or three times with both signs.
Sat3Formula random_3sat3(std::size_t n_vars, std::uint64_t seed);

// Isomorphism-invariant code for graphs with at most 16 vertices.
unsigned __int128 canonical_code(const Graph& g);

// Pairwise non-isomorphic graphs; n <= 8.
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> connected_graphs(std::size_t n);
// Grown by attaching leaf blocks; n <= 12.
std::vector<Graph> all_block_graphs(std::size_t n);
std::vector<Graph> all_cacti(std::size_t n);

}  // namespace sgeo

#endif  // SGEO_CORE_GENERATORS_HPP_
