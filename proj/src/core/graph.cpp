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

#include "core/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "core/error.hpp"

namespace sgeo {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph order " + std::to_string(n) + " exceeds the supported maximum");
  }
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " + std::to_string(dup->first) +
                                               " " + std::to_string(dup->second));
  }
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : g.edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= order() || v >= order()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph GraphBuilder::build() const {
  std::vector<Edge> edges = edges_;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(labels_.size(), edges);
}

namespace {

// Splits one line into decimal tokens; returns false on a non-numeric token.
bool parse_numbers(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool is_blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  std::vector<std::uint64_t> nums;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (is_blank_or_comment(line)) {
      if (end == text.size()) break;
      continue;
    }
    if (!parse_numbers(line, nums) || nums.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected two non-negative integers",
                  line_no);
    }
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      if (n > kMaxOrder) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": vertex count too large", line_no);
      }
      have_header = true;
    } else {
      if (nums[0] >= n || nums[1] >= n) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": endpoint out of range", line_no);
      }
      if (nums[0] == nums[1]) {
        throw Error(ErrorCode::kSelfLoop,
                    "line " + std::to_string(line_no) + ": self-loop", line_no);
      }
      if (edges.size() == m) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": more edges than declared", line_no);
      }
      Vertex u = static_cast<Vertex>(nums[0]), v = static_cast<Vertex>(nums[1]);
      edges.emplace_back(std::min(u, v), std::max(u, v));
      edge_line.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_header) {
    throw Error(ErrorCode::kParseError, "missing `n m` header line", line_no);
  }
  if (edges.size() != m) {
    throw Error(ErrorCode::kParseError,
                "declared " + std::to_string(m) + " edges but found " +
                    std::to_string(edges.size()),
                line_no);
  }
  // Report the later occurrence of a duplicate.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      std::size_t line = edge_line[order[i]];
      throw Error(ErrorCode::kDuplicateEdge,
                  "line " + std::to_string(line) + ": duplicate edge", line);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

VertexSet make_vertex_set(std::vector<Vertex> vertices, std::size_t n) {
  for (Vertex v : vertices) {
    if (v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
  std::vector<Vertex> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::uint64_t> nums;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!parse_numbers(line, nums)) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected vertex ids", line_no);
    }
    for (auto v : nums) {
      if (v >= n) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": vertex out of range", line_no);
      }
      out.push_back(static_cast<Vertex>(v));
    }
    if (end == text.size()) break;
  }
  return make_vertex_set(std::move(out), n);
}

std::string write_vertex_set(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  out += '\n';
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1)) {
      edges.emplace_back(index[u], index[v]);
    }
  }
  return Graph::from_edges(keep.size(), edges);
}

}  // namespace sgeo
