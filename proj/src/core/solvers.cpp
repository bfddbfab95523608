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

#include "core/solvers.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "core/error.hpp"
#include "core/structure.hpp"

namespace sgeo {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
}

Assignment unique_geodesics(const GeodesicIndex& index, const VertexSet& s) {
  Assignment a;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      a.set(s[i], s[j], index.first_geodesic(s[i], s[j]));
    }
  }
  return a;
}

SolveResult found(VertexSet set, std::optional<Assignment> cert) {
  SolveResult r;
  r.verdict = Verdict::kYes;
  r.sg_value = set.size();
  r.lower_bound = set.size();
  r.witness = std::move(set);
  r.certificate = std::move(cert);
  return r;
}

// Advances idx to the next r-combination of {0..m-1}; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < m - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Diamond {
  Vertex entry = 0;
  Vertex exit = 0;
  std::vector<Vertex> side[2];
  std::size_t cycle = 0;
};

struct Piece {
  bool diamond = false;
  Vertex v = 0;
  std::size_t id = 0;
};

std::size_t cyclic_distance(std::size_t a, std::size_t b, std::size_t l) {
  std::size_t d = a > b ? a - b : b - a;
  return std::min(d, l - d);
}

}  // namespace

const char* solver_name(Solver s) {
  switch (s) {
    case Solver::kAuto: return "auto";
    case Solver::kExact: return "exact";
    case Solver::kBlock: return "block";
    case Solver::kCactus: return "cactus";
    case Solver::kFpt: return "fpt";
  }
  return "auto";
}

KernelVerdict kernel_check(std::size_t n, std::size_t k, Distance diameter) {
  unsigned __int128 d = std::max<Distance>(diameter, 1);
  unsigned __int128 kk = k;
  unsigned __int128 bound = kk * (kk - (k ? 1 : 0)) / 2 * (d - 1) + kk;
  return static_cast<unsigned __int128>(n) > bound ? KernelVerdict::kReject
                                                   : KernelVerdict::kContinue;
}

KernelVerdict kernel_check(const Graph& g, std::size_t k) {
  require_connected(g);
  GeodesicIndex index(g);
  return kernel_check(g.order(), k, index.diameter());
}

SolveResult solve_exact(const Graph& g, std::optional<std::size_t> k,
                        std::optional<std::uint64_t> budget) {
  require_connected(g);
  const std::size_t n = g.order();
  if (n == 0) return found({}, Assignment{});
  GeodesicIndex index(g);
  VertexSet simp = simplicial_vertices(g);
  std::vector<Vertex> others;
  for (Vertex v = 0, i = 0; v < n; ++v) {
    if (i < simp.size() && simp[i] == v) {
      ++i;
    } else {
      others.push_back(v);
    }
  }

  SolveResult r;
  std::uint64_t used = 0;
  const std::size_t start = std::max(std::min<std::size_t>(2, n), simp.size());
  const std::size_t limit = k ? std::min(*k, n) : n;
  r.lower_bound = start;
  for (std::size_t size = start; size <= limit; ++size) {
    std::vector<std::size_t> idx(size - simp.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    do {
      VertexSet set = simp;
      for (std::size_t i : idx) set.push_back(others[i]);
      std::sort(set.begin(), set.end());
      std::optional<std::uint64_t> left;
      if (budget) {
        if (used >= *budget) {
          r.verdict = Verdict::kUnknown;
          r.nodes_explored = used;
          return r;
        }
        left = *budget - used;
      }
      RecognitionResult rr = recognize_general(index, set, left);
      used += rr.nodes_explored;
      if (rr.verdict == Verdict::kYes) {
        SolveResult out = found(std::move(set), std::move(rr.certificate));
        out.nodes_explored = used;
        return out;
      }
      if (rr.verdict == Verdict::kUnknown) {
        r.verdict = Verdict::kUnknown;
        r.nodes_explored = used;
        return r;
      }
    } while (next_combination(idx, others.size()));
    r.lower_bound = size + 1;
  }
  r.verdict = Verdict::kNo;
  r.nodes_explored = used;
  return r;
}

SolveResult solve_block(const Graph& g) {
  require_connected(g);
  if (!is_block_graph(g)) throw Error(ErrorCode::kNotBlockGraph, "graph is not a block graph");
  if (g.order() == 0) return found({}, Assignment{});
  CutTree tree = build_cut_tree(g);
  VertexSet set;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!tree.is_cut_vertex(v)) set.push_back(v);
  }
  GeodesicIndex index(g);
  Assignment cert = unique_geodesics(index, set);
  return found(std::move(set), std::move(cert));
}

std::optional<Assignment> cactus_assignment(const GeodesicIndex& index, const VertexSet& s) {
  const Graph& g = index.graph();
  const std::size_t n = g.order();
  std::vector<bool> covered(n, false);
  for (Vertex v : s) covered[v] = true;

  std::vector<Diamond> diamonds;
  std::map<VertexSet, std::size_t> cycle_ids;
  std::vector<std::pair<VertexPair, std::vector<Piece>>> routes;

  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Vertex x = s[i], y = s[j];
      DistanceRow to = index.row(y);
      auto steps = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v)) {
          if (to[w] + 1 == to[v]) out.push_back(w);
        }
        return out;
      };
      auto unique_step = [&](Vertex v) {
        auto out = steps(v);
        if (out.size() != 1) throw Error(ErrorCode::kNotCactus, "geodesics branch inside a cycle");
        return out.front();
      };
      std::vector<Piece> pieces{{false, x, 0}};
      Vertex cur = x;
      while (cur != y) {
        auto next = steps(cur);
        if (next.size() == 1) {
          cur = next.front();
        } else if (next.size() == 2) {
          Diamond d;
          d.entry = cur;
          Vertex a = next[0], b = next[1];
          while (a != b) {
            d.side[0].push_back(a);
            d.side[1].push_back(b);
            a = unique_step(a);
            b = unique_step(b);
          }
          d.exit = a;
          // Name the sides by content so crossings from either end agree.
          if (*std::min_element(d.side[1].begin(), d.side[1].end()) <
              *std::min_element(d.side[0].begin(), d.side[0].end())) {
            std::swap(d.side[0], d.side[1]);
          }
          VertexSet key{d.entry, d.exit};
          key.insert(key.end(), d.side[0].begin(), d.side[0].end());
          key.insert(key.end(), d.side[1].begin(), d.side[1].end());
          std::sort(key.begin(), key.end());
          d.cycle = cycle_ids.emplace(std::move(key), cycle_ids.size()).first->second;
          pieces.push_back({true, 0, diamonds.size()});
          diamonds.push_back(std::move(d));
          cur = a;
        } else {
          throw Error(ErrorCode::kNotCactus, "more than two geodesic branches at a vertex");
        }
        pieces.push_back({false, cur, 0});
        covered[cur] = true;
      }
      routes.emplace_back(VertexPair{x, y}, std::move(pieces));
    }
  }

  std::vector<int> choice(diamonds.size(), 0);
  std::vector<std::vector<std::size_t>> by_cycle(cycle_ids.size());
  for (std::size_t d = 0; d < diamonds.size(); ++d) by_cycle[diamonds[d].cycle].push_back(d);
  std::vector<VertexSet> cycle_vertices(cycle_ids.size());
  for (const auto& [verts, id] : cycle_ids) cycle_vertices[id] = verts;

  for (std::size_t c = 0; c < by_cycle.size(); ++c) {
    std::map<VertexPair, std::vector<std::size_t>> crossings;
    for (std::size_t d : by_cycle[c]) {
      crossings[make_pair_key(diamonds[d].entry, diamonds[d].exit)].push_back(d);
    }
    std::vector<std::size_t> singles;
    for (const auto& [key, list] : crossings) {
      if (list.size() == 1) {
        singles.push_back(list.front());
        continue;
      }
      // Two geodesics across the same antipodal pair can take opposite sides.
      choice[list[1]] = 1;
      for (std::size_t d : {list[0], list[1]}) {
        for (Vertex v : diamonds[d].side[choice[d]]) covered[v] = true;
      }
    }
    std::vector<Vertex> open;
    for (Vertex v : cycle_vertices[c]) {
      if (!covered[v]) open.push_back(v);
    }
    if (open.empty()) continue;

    std::map<Vertex, std::size_t> slot;
    for (std::size_t i = 0; i < open.size(); ++i) slot[open[i]] = i;
    std::vector<std::size_t> last(open.size(), 0);  // 1 + last single that can reach it
    for (std::size_t i = 0; i < singles.size(); ++i) {
      for (int side = 0; side < 2; ++side) {
        for (Vertex v : diamonds[singles[i]].side[side]) {
          if (auto it = slot.find(v); it != slot.end()) last[it->second] = i + 1;
        }
      }
    }
    std::vector<std::uint32_t> hits(open.size(), 0);
    std::size_t missing = open.size();
    auto mark = [&](std::size_t d, int side, int delta) {
      for (Vertex v : diamonds[d].side[side]) {
        auto it = slot.find(v);
        if (it == slot.end()) continue;
        std::uint32_t& h = hits[it->second];
        if (delta > 0 && h++ == 0) --missing;
        if (delta < 0 && --h == 0) ++missing;
      }
    };
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (missing == 0) return true;
      if (i == singles.size()) return false;
      for (std::size_t v = 0; v < open.size(); ++v) {
        if (hits[v] == 0 && last[v] <= i) return false;
      }
      for (int side = 0; side < 2; ++side) {
        choice[singles[i]] = side;
        mark(singles[i], side, +1);
        if (place(i + 1)) return true;
        mark(singles[i], side, -1);
      }
      choice[singles[i]] = 0;
      return false;
    };
    if (!place(0)) return std::nullopt;
    for (Vertex v : open) covered[v] = true;
  }

  Assignment a;
  for (const auto& [key, pieces] : routes) {
    Path path;
    for (const Piece& p : pieces) {
      if (!p.diamond) {
        path.push_back(p.v);
        continue;
      }
      const auto& side = diamonds[p.id].side[choice[p.id]];
      path.insert(path.end(), side.begin(), side.end());
    }
    a.set(key.first, key.second, std::move(path));
  }
  if (!check_assignment(index, s, a)) return std::nullopt;
  return a;
}

SolveResult solve_cactus(const Graph& g) {
  require_connected(g);
  if (!is_cactus(g)) throw Error(ErrorCode::kNotCactus, "graph is not a cactus");
  const std::size_t n = g.order();
  if (n <= 2) {
    VertexSet all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    Assignment edge;
    if (n == 2) edge.set(0, 1, {0, 1});
    return found(std::move(all), std::move(edge));
  }
  CutTree tree = build_cut_tree(g);
  VertexSet picked;
  if (tree.blocks.size() == 1) {
    std::vector<Vertex> order = cycle_order(tree.blocks[0], tree.block_edges[0]);
    picked = {order[0], order[n / 3], order[2 * n / 3]};
  } else {
    std::vector<std::vector<Vertex>> cuts(tree.blocks.size());
    for (auto [v, b] : tree.tree_edges) cuts[b].push_back(v);
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
      const VertexSet& block = tree.blocks[b];
      std::sort(cuts[b].begin(), cuts[b].end());
      if (block.size() == 2) {
        if (cuts[b].size() == 1) picked.push_back(block[0] == cuts[b][0] ? block[1] : block[0]);
        continue;
      }
      std::vector<Vertex> order = cycle_order(block, tree.block_edges[b]);
      const std::size_t l = order.size();
      std::map<Vertex, std::size_t> pos;
      for (std::size_t i = 0; i < l; ++i) pos[order[i]] = i;
      if (cuts[b].size() == 1) {
        std::size_t pa = pos[cuts[b][0]];
        picked.push_back(order[(pa + l / 2) % l]);
        if (l % 2) picked.push_back(order[(pa + l - l / 2) % l]);
        continue;
      }
      const auto& a = cuts[b];
      bool antipodal = false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
          if (2 * cyclic_distance(pos[a[i]], pos[a[j]], l) == l) antipodal = true;
        }
      }
      if (antipodal) continue;
      std::vector<bool> on_arc(l, false);
      std::size_t best = 0;
      std::pair<Vertex, Vertex> far{a[0], a[1]};
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
          std::size_t p = pos[a[i]], q = pos[a[j]];
          std::size_t d = cyclic_distance(p, q, l);
          if (d > best) {
            best = d;
            far = {a[i], a[j]};
          }
          // Walk the shorter arc from p to q.
          std::size_t fwd = (q + l - p) % l;
          for (std::size_t t = 0; t <= d; ++t) {
            on_arc[fwd == d ? (p + t) % l : (p + l - t) % l] = true;
          }
        }
      }
      if (std::all_of(on_arc.begin(), on_arc.end(), [](bool x) { return x; })) continue;
      // x1 and xk bound the only arc longer than half the cycle; pick the
      // middle vertex of that arc, counted from the lower-numbered endpoint.
      std::size_t p1 = pos[far.first], pk = pos[far.second];
      std::size_t long_len = l - best;
      bool forward = (pk + l - p1) % l == long_len;
      std::size_t k = long_len + 1;
      std::size_t step = (1 + k) / 2 - 1;
      picked.push_back(order[forward ? (p1 + step) % l : (p1 + l - step) % l]);
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    if (picked.size() < 3) {
      bool even_cycle = false;
      for (const VertexSet& block : tree.blocks) {
        if (block.size() >= 4 && block.size() % 2 == 0) even_cycle = true;
      }
      if (even_cycle) {
        for (Vertex v = 0; v < n; ++v) {
          if (!std::binary_search(picked.begin(), picked.end(), v)) {
            picked.push_back(v);
            break;
          }
        }
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());

  GeodesicIndex index(g);
  auto cert = cactus_assignment(index, picked);
  SolveResult r = found(picked, cert);
  if (!cert) {
    r.diagnostics.push_back("cactus solver: computed set is not strong geodetic");
  }
  return r;
}

SolveResult solve_fpt(const Graph& g, std::size_t k, std::optional<std::uint64_t> budget) {
  if (kernel_check(g, k) == KernelVerdict::kReject) {
    SolveResult r;
    r.verdict = Verdict::kNo;
    r.lower_bound = k + 1;
    r.diagnostics.push_back("kernel: order exceeds C(k,2)*(D-1)+k");
    return r;
  }
  return solve_exact(g, k, budget);
}

SolveResult solve(const Graph& g, Solver algorithm, std::optional<std::size_t> k,
                  std::optional<std::uint64_t> budget, Solver* used) {
  Solver pick = algorithm;
  if (pick == Solver::kAuto) {
    require_connected(g);
    GraphClass c = classify(g);
    pick = c.block ? Solver::kBlock : c.cactus ? Solver::kCactus : Solver::kExact;
  }
  if (used) *used = pick;
  SolveResult r;
  switch (pick) {
    case Solver::kFpt:
      if (!k) throw Error(ErrorCode::kInvalidArgument, "the fpt solver needs a bound k");
      return solve_fpt(g, *k, budget);
    case Solver::kBlock: r = solve_block(g); break;
    case Solver::kCactus: r = solve_cactus(g); break;
    default: return solve_exact(g, k, budget);
  }
  if (k && r.sg_value && *r.sg_value > *k) r.verdict = Verdict::kNo;
  return r;
}

nlohmann::json solve_to_json(const SolveResult& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["sg"] = r.sg_value ? nlohmann::json(*r.sg_value) : nlohmann::json(nullptr);
  j["set"] = r.witness;
  j["entries"] = r.certificate ? assignment_to_json(*r.certificate) : nlohmann::json::array();
  j["nodes_explored"] = r.nodes_explored;
  j["lower_bound"] = r.lower_bound;
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace sgeo
