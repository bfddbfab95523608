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

#ifndef SGEO_CORE_GEODESICS_HPP_
#define SGEO_CORE_GEODESICS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core/graph.hpp"

namespace sgeo {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

using BigCount = boost::multiprecision::cpp_int;
// Vertex sequence of a walk; for geodesics always starts at the first vertex of its pair.
using Path = std::vector<Vertex>;

// Directed edge (a, b) of the shortest-path DAG of a pair.
using DagEdge = std::pair<Vertex, Vertex>;

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

// One row of the distance matrix: a view into the dense matrix or an owned BFS result.
class DistanceRow {
 public:
  explicit DistanceRow(std::span<const Distance> view) : view_(view) {}
  explicit DistanceRow(std::vector<Distance> owned) : owned_(std::move(owned)) {}

  Distance operator[](Vertex v) const { return data()[v]; }
  std::span<const Distance> data() const {
    return owned_.empty() ? view_ : std::span<const Distance>(owned_);
  }

 private:
  std::span<const Distance> view_;
  std::vector<Distance> owned_;
};

// All-pairs hop distances plus per-pair geodesic queries. The dense matrix is
// materialized only up to kDenseLimit vertices; larger graphs run BFS per query.
// Holds a reference to the graph, which must outlive the index.
class GeodesicIndex {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  explicit GeodesicIndex(const Graph& g);

  const Graph& graph() const noexcept { return *graph_; }
  bool dense() const noexcept { return dense_; }

  Distance distance(Vertex u, Vertex v) const;
  DistanceRow row(Vertex u) const;
  // kUnreachable for disconnected graphs; 0 for graphs with at most one vertex.
  Distance diameter() const;

  // The remaining queries throw Error{kUnreachablePair} when d(u, v) is infinite.
  std::vector<DagEdge> dag(Vertex u, Vertex v) const;
  BigCount count(Vertex u, Vertex v) const;
  // Vertices on at least one u,v-geodesic: {x : d(u,x) + d(x,v) = d(u,v)}.
  VertexSet interval(Vertex u, Vertex v) const;
  // Lexicographic by vertex sequence; at most `limit` paths.
  std::vector<Path> enumerate(Vertex u, Vertex v,
                              std::size_t limit = std::numeric_limits<std::size_t>::max()) const;
  // The lexicographically first u,v-geodesic.
  Path first_geodesic(Vertex u, Vertex v) const;
  bool is_geodesic(const Path& path) const;

 private:
  const Graph* graph_;
  bool dense_;
  std::vector<Distance> matrix_;
  Distance diameter_ = 0;
};

// Lazily walks the u,v-geodesics in lexicographic order without materializing them.
class GeodesicCursor {
 public:
  GeodesicCursor(const GeodesicIndex& index, Vertex u, Vertex v);
  std::optional<Path> next();

 private:
  const Graph* graph_;
  Vertex target_;
  DistanceRow to_target_;
  Distance length_;
  Path path_;
  std::vector<std::size_t> cursor_;
  bool started_ = false;
  bool done_ = false;
};

GeodesicIndex all_pairs_distances(const Graph& g);
std::vector<Path> enumerate_geodesics(const Graph& g, Vertex u, Vertex v,
                                      std::size_t limit = std::numeric_limits<std::size_t>::max());
BigCount count_geodesics(const Graph& g, Vertex u, Vertex v);
VertexSet interval(const Graph& g, Vertex u, Vertex v);

}  // namespace sgeo

#endif  // SGEO_CORE_GEODESICS_HPP_
