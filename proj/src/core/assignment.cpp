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

#include "core/assignment.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "core/error.hpp"

namespace sgeo {

void Assignment::set(Vertex a, Vertex b, Path path) {
  auto key = make_pair_key(a, b);
  if (!path.empty() && path.front() != key.first) std::reverse(path.begin(), path.end());
  entries_[key] = std::move(path);
}

const Path* Assignment::find(Vertex a, Vertex b) const {
  auto it = entries_.find(make_pair_key(a, b));
  return it == entries_.end() ? nullptr : &it->second;
}

bool check_assignment(const Graph& g, const VertexSet& set, const Assignment& a) {
  return check_assignment(GeodesicIndex(g), set, a);
}

bool check_assignment(const GeodesicIndex& index, const VertexSet& set, const Assignment& a) {
  const Graph& g = index.graph();
  const std::size_t n = g.order();
  for (const auto& [key, path] : a) {
    auto [u, v] = key;
    if (path.size() < 2 || path.front() != u || path.back() != v) {
      throw Error(ErrorCode::kMalformedPath, "path for pair " + std::to_string(u) + " " +
                                                 std::to_string(v) + " has wrong endpoints");
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (path[i - 1] >= n || path[i] >= n || !g.has_edge(path[i - 1], path[i])) {
        throw Error(ErrorCode::kMalformedPath,
                    "path for pair " + std::to_string(u) + " " + std::to_string(v) +
                        " steps along a non-edge");
      }
    }
  }
  for (Vertex v : set) {
    if (v >= n) throw Error(ErrorCode::kInvalidArgument, "set vertex out of range");
  }
  const std::size_t pairs = set.size() * (set.size() - (set.empty() ? 0 : 1)) / 2;
  if (a.size() != pairs) return false;
  std::vector<bool> covered(n, false);
  for (Vertex v : set) covered[v] = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Path* path = a.find(set[i], set[j]);
      if (path == nullptr) return false;
      if (index.distance(set[i], set[j]) != path->size() - 1) return false;
      for (Vertex x : *path) covered[x] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

std::string format_certificate(const Assignment& a) {
  std::ostringstream out;
  for (const auto& [key, path] : a) {
    out << "pair " << key.first << ' ' << key.second << " :";
    for (Vertex x : path) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

namespace {

bool parse_vertex(std::string_view token, Vertex& out) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value > 0xffffffffu) {
    return false;
  }
  out = static_cast<Vertex>(value);
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Assignment parse_certificate(std::string_view text) {
  Assignment a;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (!tokens.empty() && tokens[0].front() != '#') {
      auto fail = [&] {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": expected `pair u v : v0 ... vk`",
                    line_no);
      };
      Vertex u = 0, v = 0;
      if (tokens.size() < 5 || tokens[0] != "pair" || tokens[3] != ":" ||
          !parse_vertex(tokens[1], u) || !parse_vertex(tokens[2], v)) {
        fail();
      }
      Path path;
      for (std::size_t i = 4; i < tokens.size(); ++i) {
        Vertex x = 0;
        if (!parse_vertex(tokens[i], x)) fail();
        path.push_back(x);
      }
      if (u >= v || a.find(u, v) != nullptr) fail();
      // Keep the orientation as written so that check_assignment can reject it.
      a.set_exact({u, v}, std::move(path));
    }
    if (end == text.size()) break;
  }
  return a;
}

nlohmann::json assignment_to_json(const Assignment& a) {
  auto entries = nlohmann::json::array();
  for (const auto& [key, path] : a) {
    entries.push_back({{"pair", {key.first, key.second}}, {"path", path}});
  }
  return entries;
}

}  // namespace sgeo
