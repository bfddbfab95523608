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

#include "core/matching.hpp"

#include <limits>

#include "core/error.hpp"

namespace sgeo {

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t left, std::size_t right, std::span<const BipartiteEdge> edges)
      : adj_(left), left_mate_(left, kUnmatched), right_mate_(right, kUnmatched), layer_(left) {
    for (auto [a, b] : edges) {
      if (a >= left || b >= right) {
        throw Error(ErrorCode::kInvalidArgument, "matching edge endpoint out of range");
      }
      adj_[a].push_back(b);
    }
  }

  void run() {
    while (bfs()) {
      next_.assign(adj_.size(), 0);
      for (std::uint32_t a = 0; a < adj_.size(); ++a) {
        if (left_mate_[a] == kUnmatched) dfs(a);
      }
    }
  }

  Matching result() && {
    Matching m;
    for (std::uint32_t a = 0; a < left_mate_.size(); ++a) {
      if (left_mate_[a] != kUnmatched) m.pairs.emplace_back(a, left_mate_[a]);
    }
    m.left_mate = std::move(left_mate_);
    m.right_mate = std::move(right_mate_);
    return m;
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t a = 0; a < adj_.size(); ++a) {
      if (left_mate_[a] == kUnmatched) {
        layer_[a] = 0;
        queue.push_back(a);
      } else {
        layer_[a] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t a = queue[head];
      for (std::uint32_t b : adj_[a]) {
        std::uint32_t next = right_mate_[b];
        if (next == kUnmatched) {
          found = true;
        } else if (layer_[next] == kInf) {
          layer_[next] = layer_[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  // Iterative augmenting-path search restricted to the BFS layering.
  bool dfs(std::uint32_t root) {
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      std::uint32_t a = stack.back();
      if (next_[a] == adj_[a].size()) {
        layer_[a] = kInf;
        stack.pop_back();
        continue;
      }
      std::uint32_t b = adj_[a][next_[a]];
      std::uint32_t mate = right_mate_[b];
      if (mate == kUnmatched) {
        // Flip the alternating path held on the stack.
        for (std::size_t i = stack.size(); i-- > 0;) {
          std::uint32_t x = stack[i];
          std::uint32_t y = adj_[x][next_[x]];
          left_mate_[x] = y;
          right_mate_[y] = x;
        }
        return true;
      }
      if (layer_[mate] == layer_[a] + 1) {
        stack.push_back(mate);
      } else {
        ++next_[a];
      }
    }
    return false;
  }

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> left_mate_;
  std::vector<std::uint32_t> right_mate_;
  std::vector<std::uint32_t> layer_;
  std::vector<std::size_t> next_;
};

}  // namespace

Matching maximum_bipartite_matching(std::size_t left, std::size_t right,
                                    std::span<const BipartiteEdge> edges) {
  HopcroftKarp hk(left, right, edges);
  hk.run();
  return std::move(hk).result();
}

}  // namespace sgeo
