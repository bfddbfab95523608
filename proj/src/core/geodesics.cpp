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

#include "core/geodesics.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "core/error.hpp"

namespace sgeo {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex a = queue[head];
    for (Vertex b : g.neighbors(a)) {
      if (dist[b] == kUnreachable) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

GeodesicIndex::GeodesicIndex(const Graph& g)
    : graph_(&g), dense_(g.order() <= kDenseLimit) {
  const std::size_t n = g.order();
  if (!dense_) return;
  matrix_.resize(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    auto d = bfs_distances(g, static_cast<Vertex>(s));
    std::copy(d.begin(), d.end(), matrix_.begin() + s * n);
    for (Distance x : d) diameter_ = std::max(diameter_, x);
  }
}

Distance GeodesicIndex::distance(Vertex u, Vertex v) const {
  if (dense_) return matrix_[std::size_t{u} * graph_->order() + v];
  return bfs_distances(*graph_, u)[v];
}

DistanceRow GeodesicIndex::row(Vertex u) const {
  if (dense_) {
    const std::size_t n = graph_->order();
    return DistanceRow(std::span<const Distance>(matrix_.data() + std::size_t{u} * n, n));
  }
  return DistanceRow(bfs_distances(*graph_, u));
}

Distance GeodesicIndex::diameter() const {
  if (dense_) return diameter_;
  Distance best = 0;
  for (std::size_t s = 0; s < graph_->order(); ++s) {
    for (Distance x : bfs_distances(*graph_, static_cast<Vertex>(s))) best = std::max(best, x);
  }
  return best;
}

namespace {

void require_reachable(Distance d, Vertex u, Vertex v) {
  if (d == kUnreachable) {
    throw Error(ErrorCode::kUnreachablePair,
                "no path between " + std::to_string(u) + " and " + std::to_string(v));
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

std::vector<DagEdge> GeodesicIndex::dag(Vertex u, Vertex v) const {
  require_vertex(*graph_, u);
  require_vertex(*graph_, v);
  auto du = row(u);
  auto dv = row(v);
  const Distance total = du[v];
  require_reachable(total, u, v);
  std::vector<DagEdge> out;
  for (std::size_t a = 0; a < graph_->order(); ++a) {
    if (du[a] == kUnreachable || du[a] >= total || du[a] + dv[a] != total) continue;
    for (Vertex b : graph_->neighbors(static_cast<Vertex>(a))) {
      if (du[a] + 1 + dv[b] == total) out.emplace_back(static_cast<Vertex>(a), b);
    }
  }
  return out;
}

BigCount GeodesicIndex::count(Vertex u, Vertex v) const {
  require_vertex(*graph_, u);
  require_vertex(*graph_, v);
  auto du = row(u);
  auto dv = row(v);
  const Distance total = du[v];
  require_reachable(total, u, v);
  // Layer the interval by distance from u, then push counts forward.
  std::vector<std::vector<Vertex>> layers(total + 1);
  for (std::size_t x = 0; x < graph_->order(); ++x) {
    if (du[x] != kUnreachable && dv[x] != kUnreachable && du[x] + dv[x] == total) {
      layers[du[x]].push_back(static_cast<Vertex>(x));
    }
  }
  std::vector<BigCount> ways(graph_->order());
  ways[u] = 1;
  for (Distance layer = 0; layer < total; ++layer) {
    for (Vertex a : layers[layer]) {
      for (Vertex b : graph_->neighbors(a)) {
        if (du[b] == layer + 1 && dv[b] + du[b] == total) ways[b] += ways[a];
      }
    }
  }
  return ways[v];
}

VertexSet GeodesicIndex::interval(Vertex u, Vertex v) const {
  require_vertex(*graph_, u);
  require_vertex(*graph_, v);
  auto du = row(u);
  auto dv = row(v);
  const Distance total = du[v];
  require_reachable(total, u, v);
  VertexSet out;
  for (std::size_t x = 0; x < graph_->order(); ++x) {
    if (du[x] != kUnreachable && dv[x] != kUnreachable && du[x] + dv[x] == total) {
      out.push_back(static_cast<Vertex>(x));
    }
  }
  return out;
}

std::vector<Path> GeodesicIndex::enumerate(Vertex u, Vertex v, std::size_t limit) const {
  require_vertex(*graph_, u);
  require_vertex(*graph_, v);
  require_reachable(distance(u, v), u, v);
  std::vector<Path> out;
  GeodesicCursor cursor(*this, u, v);
  while (out.size() < limit) {
    auto p = cursor.next();
    if (!p) break;
    out.push_back(std::move(*p));
  }
  return out;
}

Path GeodesicIndex::first_geodesic(Vertex u, Vertex v) const {
  auto paths = enumerate(u, v, 1);
  return std::move(paths.front());
}

bool GeodesicIndex::is_geodesic(const Path& path) const {
  if (path.empty()) return false;
  for (Vertex x : path) {
    if (x >= graph_->order()) return false;
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!graph_->has_edge(path[i - 1], path[i])) return false;
  }
  return distance(path.front(), path.back()) == path.size() - 1;
}

GeodesicCursor::GeodesicCursor(const GeodesicIndex& index, Vertex u, Vertex v)
    : graph_(&index.graph()), target_(v), to_target_(index.row(v)) {
  length_ = to_target_[u];
  require_reachable(length_, u, v);
  path_.push_back(u);
}

// Depth-first over the DAG; cursor_[i] is the next neighbor index to try from path_[i].
std::optional<Path> GeodesicCursor::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    cursor_.assign(1, 0);
  } else {
    // Backtrack from the previously emitted complete path.
    if (length_ == 0) {
      done_ = true;
      return std::nullopt;
    }
    path_.pop_back();
    cursor_.pop_back();
  }
  while (true) {
    if (path_.size() == length_ + 1) return path_;
    const std::size_t depth = path_.size() - 1;
    Vertex a = path_[depth];
    auto nb = graph_->neighbors(a);
    std::size_t& i = cursor_[depth];
    const Distance want = to_target_[a] - 1;
    while (i < nb.size() && to_target_[nb[i]] != want) ++i;
    if (i < nb.size()) {
      path_.push_back(nb[i]);
      ++i;
      cursor_.push_back(0);
      continue;
    }
    if (depth == 0) {
      done_ = true;
      return std::nullopt;
    }
    path_.pop_back();
    cursor_.pop_back();
  }
}

GeodesicIndex all_pairs_distances(const Graph& g) { return GeodesicIndex(g); }

std::vector<Path> enumerate_geodesics(const Graph& g, Vertex u, Vertex v, std::size_t limit) {
  return GeodesicIndex(g).enumerate(u, v, limit);
}

BigCount count_geodesics(const Graph& g, Vertex u, Vertex v) {
  return GeodesicIndex(g).count(u, v);
}

VertexSet interval(const Graph& g, Vertex u, Vertex v) { return GeodesicIndex(g).interval(u, v); }

}  // namespace sgeo
