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

#ifndef SGEO_CORE_ASSIGNMENT_HPP_
#define SGEO_CORE_ASSIGNMENT_HPP_

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "core/geodesics.hpp"
#include "core/graph.hpp"

namespace sgeo {

// Unordered pair of distinct vertices, stored with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_key(Vertex a, Vertex b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Shortest path assignment: one path per unordered pair of the set, oriented
// from the smaller to the larger endpoint.
class Assignment {
 public:
  using Map = std::map<VertexPair, Path>;

  // Reverses `path` if needed so that it runs from min(a,b) to max(a,b).
  void set(Vertex a, Vertex b, Path path);
  // Stores the path as given, without reorienting it.
  void set_exact(VertexPair key, Path path) { entries_[key] = std::move(path); }
  const Path* find(Vertex a, Vertex b) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }
  const Map& entries() const noexcept { return entries_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  Map entries_;
};

// True iff `a` has exactly one geodesic for every pair of `set` and the paths
// together with `set` cover V(g). Throws Error{kMalformedPath} when a path has
// a non-edge step or endpoints that differ from its pair.
bool check_assignment(const Graph& g, const VertexSet& set, const Assignment& a);
bool check_assignment(const GeodesicIndex& index, const VertexSet& set, const Assignment& a);

// `pair u v : v0 v1 ... vk`, one line per pair in (u, v) order.
std::string format_certificate(const Assignment& a);
Assignment parse_certificate(std::string_view text);

nlohmann::json assignment_to_json(const Assignment& a);

}  // namespace sgeo

#endif  // SGEO_CORE_ASSIGNMENT_HPP_
