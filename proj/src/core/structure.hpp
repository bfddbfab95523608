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

#ifndef SGEO_CORE_STRUCTURE_HPP_
#define SGEO_CORE_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "core/geodesics.hpp"
#include "core/graph.hpp"

namespace sgeo {

// Vertices whose open neighborhood is a clique (isolated vertices included).
VertexSet simplicial_vertices(const Graph& g);

bool is_connected(const Graph& g);

// Block-cut tree. Block i is blocks[i]; tree_edges holds (cut vertex, block index)
// incidences. Blocks are ordered by their smallest vertex, then lexicographically.
struct CutTree {
  std::vector<VertexSet> blocks;
  std::vector<std::vector<Edge>> block_edges;
  VertexSet cut_vertices;
  std::vector<std::pair<Vertex, std::size_t>> tree_edges;

  // Number of cut vertices in block i (its degree in the tree).
  std::size_t block_degree(std::size_t i) const;
  bool is_cut_vertex(Vertex v) const;
};

// Throws Error{kDisconnected}.
CutTree build_cut_tree(const Graph& g);

// Two-colouring with part[0] holding vertex 0's side of each component.
struct Bipartition {
  VertexSet left;
  VertexSet right;
};
std::optional<Bipartition> bipartition(const Graph& g);

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};
// Hammer-Simeone degree-sequence test; the clique is the m highest-degree vertices.
std::optional<SplitPartition> split_partition(const Graph& g);

bool is_chordal(const Graph& g);
bool is_co_bipartite(const Graph& g);
bool is_block_graph(const Graph& g);
bool is_cactus(const Graph& g);

// Cyclic vertex order of a block that is an induced cycle, starting at the
// smallest vertex and continuing towards its smaller cycle neighbor.
std::vector<Vertex> cycle_order(const VertexSet& block, const std::vector<Edge>& edges);

struct GraphClass {
  bool connected = false;
  bool bipartite = false;
  bool co_bipartite = false;
  bool chordal = false;
  bool split = false;
  bool block = false;
  bool cactus = false;
  Distance diameter = 0;
};
GraphClass classify(const Graph& g);

}  // namespace sgeo

#endif  // SGEO_CORE_STRUCTURE_HPP_
