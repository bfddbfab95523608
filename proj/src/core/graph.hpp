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

#ifndef SGEO_CORE_GRAPH_HPP_
#define SGEO_CORE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgeo {

using Vertex = std::uint32_t;
// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

// Immutable simple undirected graph on the dense vertex range [0, n).
// Adjacency is kept in CSR form with each neighbor list sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Throws Error{kSelfLoop, kDuplicateEdge, kInvalidArgument}.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  // Sorted by (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

// Incremental construction with per-vertex labels; used by the reductions.
class GraphBuilder {
 public:
  Vertex add_vertex(std::string label);
  // Silently ignores an edge that is already present.
  void add_edge(Vertex u, Vertex v);
  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// Edge-list text: `#` comment lines, a header `n m`, then m lines `u v`.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Whitespace-separated vertex ids with `#` comments; result sorted and unique.
VertexSet parse_vertex_set(std::string_view text, std::size_t n);
std::string write_vertex_set(const VertexSet& s);

// Sorts and removes duplicates; throws kInvalidArgument on ids >= n.
VertexSet make_vertex_set(std::vector<Vertex> vertices, std::size_t n);

Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace sgeo

#endif  // SGEO_CORE_GRAPH_HPP_
