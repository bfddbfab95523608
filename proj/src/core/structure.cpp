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

#include "core/structure.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace sgeo {

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    bool clique = true;
    for (std::size_t i = 0; i < nb.size() && clique; ++i) {
      if (g.degree(nb[i]) + 1 < nb.size()) {
        clique = false;
        break;
      }
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.has_edge(nb[i], nb[j])) {
          clique = false;
          break;
        }
      }
    }
    if (clique) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](Distance x) { return x == kUnreachable; });
}

std::size_t CutTree::block_degree(std::size_t i) const {
  std::size_t count = 0;
  for (Vertex v : blocks[i]) count += is_cut_vertex(v) ? 1 : 0;
  return count;
}

bool CutTree::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

CutTree build_cut_tree(const Graph& g) {
  const std::size_t n = g.order();
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "cut tree requires a connected graph");
  }
  CutTree tree;
  if (n == 0) return tree;
  if (n == 1) {
    tree.blocks.push_back({0});
    tree.block_edges.emplace_back();
    return tree;
  }
  // Iterative Hopcroft-Tarjan with an edge stack.
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
  std::vector<std::size_t> next_index(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> comps;
  std::vector<Vertex> stack;
  std::uint32_t timer = 0;
  std::vector<bool> is_cut(n, false);
  std::size_t root_children = 0;

  const Vertex root = 0;
  disc[root] = low[root] = ++timer;
  stack.push_back(root);
  while (!stack.empty()) {
    Vertex a = stack.back();
    auto nb = g.neighbors(a);
    if (next_index[a] < nb.size()) {
      Vertex b = nb[next_index[a]++];
      if (disc[b] == 0) {
        parent[b] = a;
        disc[b] = low[b] = ++timer;
        edge_stack.emplace_back(a, b);
        stack.push_back(b);
        if (a == root) ++root_children;
      } else if (b != parent[a] && disc[b] < disc[a]) {
        low[a] = std::min(low[a], disc[b]);
        edge_stack.emplace_back(a, b);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    Vertex p = parent[a];
    low[p] = std::min(low[p], low[a]);
    if (low[a] >= disc[p]) {
      if (p != root) is_cut[p] = true;
      std::vector<Edge> comp;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        comp.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
        if (e.first == p && e.second == a) break;
      }
      comps.push_back(std::move(comp));
    }
  }
  if (root_children > 1) is_cut[root] = true;

  std::vector<std::pair<VertexSet, std::vector<Edge>>> blocks;
  for (auto& comp : comps) {
    VertexSet vs;
    for (auto [u, v] : comp) {
      vs.push_back(u);
      vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(comp.begin(), comp.end());
    blocks.emplace_back(std::move(vs), std::move(comp));
  }
  std::sort(blocks.begin(), blocks.end());
  for (auto& [vs, es] : blocks) {
    tree.blocks.push_back(std::move(vs));
    tree.block_edges.push_back(std::move(es));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) tree.cut_vertices.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    for (Vertex v : tree.blocks[i]) {
      if (is_cut[v]) tree.tree_edges.emplace_back(v, i);
    }
  }
  std::sort(tree.tree_edges.begin(), tree.tree_edges.end());
  return tree;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex a = queue[head];
      for (Vertex b : g.neighbors(a)) {
        if (colour[b] == -1) {
          colour[b] = 1 - colour[a];
          queue.push_back(b);
        } else if (colour[b] == colour[a]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) {
    (colour[v] == 0 ? parts.left : parts.right).push_back(static_cast<Vertex>(v));
  }
  return parts;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;  // d_i >= i - 1 (1-based)
  }
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m - (m > 0 ? 1 : 0)) + tail) return std::nullopt;
  SplitPartition parts;
  parts.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  parts.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
  std::sort(parts.clique.begin(), parts.clique.end());
  std::sort(parts.independent.begin(), parts.independent.end());
  return parts;
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search, then the Tarjan-Yannakakis elimination check.
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> order;  // order[i] = vertex numbered i-th (visit order)
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (std::size_t v = n; v-- > 0;) buckets[0].push_back(static_cast<Vertex>(v));
  std::size_t best = 0;
  while (order.size() < n) {
    while (true) {
      while (buckets[best].empty()) --best;
      Vertex v = buckets[best].back();
      buckets[best].pop_back();
      if (numbered[v] || weight[v] != best) continue;
      numbered[v] = true;
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!numbered[w]) {
          ++weight[w];
          buckets[weight[w]].push_back(w);
          best = std::max(best, weight[w]);
        }
      }
      break;
    }
  }
  // Elimination order is the reverse of the visit order.
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = n - 1 - i;
  std::vector<Vertex> elim(n);
  for (std::size_t v = 0; v < n; ++v) elim[pos[v]] = static_cast<Vertex>(v);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = elim[i];
    // Earliest-eliminated later neighbor must be adjacent to all other later neighbors.
    Vertex parent = static_cast<Vertex>(-1);
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > i && (parent == static_cast<Vertex>(-1) || pos[w] < pos[parent])) parent = w;
    }
    if (parent == static_cast<Vertex>(-1)) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > i && w != parent && !g.has_edge(parent, w)) return false;
    }
  }
  return true;
}

bool is_co_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  // Two cliques on a + b = n vertices carry at least this many edges.
  const std::size_t a = n / 2, b = n - n / 2;
  const std::size_t floor_edges = a * (a - (a ? 1 : 0)) / 2 + b * (b - (b ? 1 : 0)) / 2;
  if (g.size() < floor_edges) return false;
  std::vector<int> colour(n, -1);
  std::vector<Vertex> queue;
  std::vector<bool> adjacent(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) adjacent[y] = true;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || adjacent[y]) continue;
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(static_cast<Vertex>(y));
        } else if (colour[y] == colour[x]) {
          for (Vertex z : g.neighbors(x)) adjacent[z] = false;
          return false;
        }
      }
      for (Vertex y : g.neighbors(x)) adjacent[y] = false;
    }
  }
  return true;
}

bool is_block_graph(const Graph& g) {
  if (!is_connected(g)) return false;
  auto tree = build_cut_tree(g);
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    const std::size_t k = tree.blocks[i].size();
    if (tree.block_edges[i].size() != k * (k - 1) / 2) return false;
  }
  return true;
}

bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  auto tree = build_cut_tree(g);
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    const std::size_t k = tree.blocks[i].size();
    const std::size_t m = tree.block_edges[i].size();
    // A biconnected block with as many edges as vertices is a cycle.
    if (k <= 2) continue;
    if (m != k) return false;
  }
  return true;
}

std::vector<Vertex> cycle_order(const VertexSet& block, const std::vector<Edge>& edges) {
  std::vector<Vertex> order;
  if (block.empty()) return order;
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(block.begin(), block.end(), v) - block.begin());
  };
  std::vector<std::vector<Vertex>> adj(block.size());
  for (auto [u, v] : edges) {
    adj[local(u)].push_back(v);
    adj[local(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  Vertex start = block.front();
  order.push_back(start);
  if (block.size() == 1) return order;
  Vertex prev = start;
  Vertex cur = adj[0].front();
  while (cur != start) {
    order.push_back(cur);
    const auto& nb = adj[local(cur)];
    if (nb.size() < 2) break;
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  c.connected = is_connected(g);
  c.bipartite = bipartition(g).has_value();
  c.co_bipartite = is_co_bipartite(g);
  c.chordal = is_chordal(g);
  c.split = split_partition(g).has_value();
  c.block = c.connected && is_block_graph(g);
  c.cactus = c.connected && is_cactus(g);
  if (c.connected) {
    c.diameter = GeodesicIndex(g).diameter();
  } else {
    c.diameter = kUnreachable;
  }
  return c;
}

}  // namespace sgeo
