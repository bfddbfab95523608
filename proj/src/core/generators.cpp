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

#include "core/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "core/error.hpp"
#include "core/structure.hpp"

namespace sgeo {

namespace {

Graph from_list(std::size_t n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

// Grows a graph by gluing blocks at existing vertices. `attach` adds one
// block's edges and returns the new order.
template <typename Attach>
Graph grow(std::size_t n, Attach attach) {
  if (n == 0) return Graph::from_edges(0, {});
  std::vector<Edge> edges;
  std::size_t order = 1;
  while (order < n) order = attach(order, n - order, edges);
  return from_list(n, std::move(edges));
}

std::vector<Vertex> adjacency_masks(const Graph& g) {
  std::vector<Vertex> mask(g.order(), 0);
  for (const Edge& e : g.edges()) {
    mask[e.first] |= Vertex{1} << e.second;
    mask[e.second] |= Vertex{1} << e.first;
  }
  return mask;
}

std::vector<std::size_t> refine(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    std::set<std::size_t> before(colour.begin(), colour.end()), after(next.begin(), next.end());
    colour = std::move(next);
    if (after.size() == before.size()) break;
  }
  return colour;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), mask_(adjacency_masks(g)) {
    auto colour = refine(g);
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    cell_of_position_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) cell_of_position_[i] = colour[order[i]];
    colour_ = std::move(colour);
    used_.assign(n_, false);
    perm_.assign(n_, 0);
  }

  unsigned __int128 run() {
    if (n_ <= 1) return 0;
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t pos, unsigned __int128 code, std::size_t bits) {
    if (pos == n_) {
      if (!have_best_ || code > best_) {
        best_ = code;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != cell_of_position_[pos]) continue;
      unsigned __int128 next = code;
      for (std::size_t j = 0; j < pos; ++j) {
        next = (next << 1) | ((mask_[perm_[j]] >> v) & 1U);
      }
      std::size_t nbits = bits + pos;
      if (have_best_) {
        unsigned __int128 prefix = best_ >> (total_bits() - nbits);
        if (next < prefix) continue;
      }
      used_[v] = true;
      perm_[pos] = v;
      search(pos + 1, next, nbits);
      used_[v] = false;
    }
  }

  std::size_t total_bits() const { return n_ * (n_ - 1) / 2; }

  std::size_t n_;
  std::vector<Vertex> mask_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> cell_of_position_;
  std::vector<bool> used_;
  std::vector<Vertex> perm_;
  unsigned __int128 best_ = 0;
  bool have_best_ = false;
};

// Keeps the first graph of every isomorphism class, in insertion order.
class Dedup {
 public:
  bool insert(const Graph& g) {
    return seen_.insert({g.order() * 1000 + g.size(), canonical_code(g)}).second;
  }

 private:
  std::set<std::pair<std::size_t, unsigned __int128>> seen_;
};

std::vector<Graph> grow_family(std::size_t n, bool cactus) {
  std::vector<std::vector<Graph>> by_order(n + 1);
  by_order[1].push_back(Graph::from_edges(1, {}));
  std::vector<Dedup> seen(n + 1);
  seen[1].insert(by_order[1].front());
  for (std::size_t m = 1; m < n; ++m) {
    for (const Graph& g : by_order[m]) {
      for (Vertex v = 0; v < m; ++v) {
        for (std::size_t add = 1; m + add <= n; ++add) {
          std::vector<Edge> edges = g.edges();
          std::vector<Vertex> fresh;
          for (std::size_t i = 0; i < add; ++i) fresh.push_back(static_cast<Vertex>(m + i));
          if (cactus) {
            // A pendant edge (add == 1) or a cycle through v of length add + 1.
            if (add == 1) {
              edges.emplace_back(v, fresh[0]);
            } else {
              Vertex prev = v;
              for (Vertex f : fresh) {
                edges.emplace_back(prev, f);
                prev = f;
              }
              edges.emplace_back(v, prev);
            }
          } else {
            std::vector<Vertex> clique = fresh;
            clique.push_back(v);
            for (std::size_t i = 0; i < clique.size(); ++i) {
              for (std::size_t j = i + 1; j < clique.size(); ++j) {
                edges.emplace_back(clique[i], clique[j]);
              }
            }
          }
          Graph h = from_list(m + add, std::move(edges));
          if (seen[m + add].insert(h)) by_order[m + add].push_back(std::move(h));
        }
      }
    }
  }
  return by_order[n];
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return from_list(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return from_list(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return from_list(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) e.emplace_back(u, static_cast<Vertex>(v));
  }
  return from_list(a + b, e);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph random_cactus(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return grow(n, [&](std::size_t order, std::size_t room, std::vector<Edge>& edges) {
    auto v = static_cast<Vertex>(rng.range(0, order - 1));
    std::size_t len = rng.chance(1, 2) ? 2 : rng.range(3, 6);
    len = std::min(len, room + 1);
    if (len == 2) {
      edges.emplace_back(v, static_cast<Vertex>(order));
      return order + 1;
    }
    Vertex prev = v;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      auto f = static_cast<Vertex>(order + i);
      edges.emplace_back(prev, f);
      prev = f;
    }
    edges.emplace_back(prev, v);
    return order + len - 1;
  });
}

Graph random_block_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return grow(n, [&](std::size_t order, std::size_t room, std::vector<Edge>& edges) {
    auto v = static_cast<Vertex>(rng.range(0, order - 1));
    std::size_t size = std::min<std::size_t>(rng.range(2, 4), room + 1);
    std::vector<Vertex> clique{v};
    for (std::size_t i = 0; i + 1 < size; ++i) clique.push_back(static_cast<Vertex>(order + i));
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    }
    return order + size - 1;
  });
}

Graph random_split_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  if (n == 0) return Graph::from_edges(0, {});
  std::size_t c = rng.range(1, n);
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  rng.shuffle(ids);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) e.emplace_back(ids[i], ids[j]);
  }
  for (std::size_t u = c; u < n; ++u) {
    e.emplace_back(ids[u], ids[rng.range(0, c - 1)]);
    for (std::size_t i = 0; i < c; ++i) {
      if (rng.chance(1, 2)) e.emplace_back(ids[u], ids[i]);
    }
  }
  return from_list(n, e);
}

Graph random_bipartite_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> side(n, 0);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    auto parent = static_cast<Vertex>(rng.range(0, v - 1));
    side[v] = 1 - side[parent];
    e.emplace_back(parent, v);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (side[u] != side[v] && rng.chance(1, 3)) e.emplace_back(u, v);
    }
  }
  return from_list(n, e);
}

Graph random_connected_graph(std::size_t n, std::uint64_t seed, std::uint64_t num,
                             std::uint64_t den) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.range(0, v - 1)), v);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) e.emplace_back(u, v);
    }
  }
  return from_list(n, e);
}

Sat3Formula random_3sat3(std::size_t n_vars, std::uint64_t seed) {
  if (n_vars < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two variables");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> lits;
    for (std::size_t v = 1; v <= n_vars; ++v) {
      int x = static_cast<int>(v);
      lits.push_back(x);
      lits.push_back(-x);
      if (rng.chance(1, 2)) lits.push_back(rng.chance(1, 2) ? x : -x);
    }
    rng.shuffle(lits);
    const std::size_t total = lits.size();
    const std::size_t lo = (total + 2) / 3, hi = total / 2;
    const std::size_t m = rng.range(lo, hi);
    std::size_t threes = total - 2 * m;
    Sat3Formula f;
    f.n_vars = n_vars;
    std::size_t at = 0;
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      std::size_t len = j < threes ? 3 : 2;
      std::vector<int> c(lits.begin() + static_cast<long>(at),
                         lits.begin() + static_cast<long>(at + len));
      at += len;
      for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          if (std::abs(c[a]) == std::abs(c[b])) ok = false;
        }
      }
      f.clauses.push_back(std::move(c));
    }
    if (ok) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "could not draw a formula");
}

unsigned __int128 canonical_code(const Graph& g) {
  if (g.order() > 16) throw Error(ErrorCode::kInvalidArgument, "canonical form supports n <= 16");
  return Canonizer(g).run();
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > 8) throw Error(ErrorCode::kInvalidArgument, "exhaustive enumeration supports n <= 8");
  static std::map<std::size_t, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n <= 1) {
    out.push_back(Graph::from_edges(n, {}));
  } else {
    Dedup seen;
    for (const Graph& g : all_graphs(n - 1)) {
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<Edge> e = g.edges();
        for (Vertex v = 0; v + 1 < n; ++v) {
          if (mask >> v & 1U) e.emplace_back(v, static_cast<Vertex>(n - 1));
        }
        Graph h = from_list(n, std::move(e));
        if (seen.insert(h)) out.push_back(std::move(h));
      }
    }
  }
  cache[n] = out;
  return out;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> all_block_graphs(std::size_t n) {
  if (n == 0 || n > 12) throw Error(ErrorCode::kInvalidArgument, "block enumeration needs 1 <= n <= 12");
  return grow_family(n, false);
}

std::vector<Graph> all_cacti(std::size_t n) {
  if (n == 0 || n > 12) throw Error(ErrorCode::kInvalidArgument, "cactus enumeration needs 1 <= n <= 12");
  return grow_family(n, true);
}

}  // namespace sgeo
