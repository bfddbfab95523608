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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/geodesics.hpp"
#include "core/graph.hpp"
#include "core/matching.hpp"
#include "core/structure.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace sgeo;
using fixtures::error_of;
using fixtures::make;

TEST_CASE("parse_graph reads the edge-list format") {
  Graph g = parse_graph("3 2\n0 1\n1 2\n");
  CHECK(g == path_graph(3));
  CHECK(parse_graph("# header comment\n3 2\n\n0 1\n  # between\n1 2") == path_graph(3));
  CHECK(parse_graph("1 0\n").order() == 1);
}

TEST_CASE("parse_graph rejects bad input with line numbers") {
  try {
    parse_graph("2 1\n0 0\n");
    FAIL("expected a self-loop error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSelfLoop);
    REQUIRE(e.line().has_value());
    CHECK(*e.line() == 2);
  }
  try {
    parse_graph("3 3\n0 1\n1 2\n1 0\n");
    FAIL("expected a duplicate-edge error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDuplicateEdge);
    CHECK(e.line().value_or(0) == 4);
  }
  CHECK(error_of([] { parse_graph("3 2\n0 1\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_graph("3 1\n0 3\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_graph("3 1\n0 x\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_graph(""); }) == ErrorCode::kParseError);
}

TEST_CASE("write_graph round-trips") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected_graph(9, seed);
    std::string once = write_graph(g);
    CHECK(parse_graph(once) == g);
    CHECK(write_graph(parse_graph(once)) == once);
  }
}

TEST_CASE("vertex sets parse with comments and are normalized") {
  CHECK(parse_vertex_set("3 1 # tail\n2\n", 5) == VertexSet{1, 2, 3});
  CHECK(make_vertex_set({4, 0, 4}, 5) == VertexSet{0, 4});
  CHECK(error_of([] { parse_vertex_set("7", 5); }).has_value());
  CHECK(parse_vertex_set(write_vertex_set({0, 2, 9}), 10) == VertexSet{0, 2, 9});
}

TEST_CASE("Graph::from_edges validates and builds sorted adjacency") {
  CHECK(error_of([] { make(3, {{0, 1}, {1, 0}}); }) == ErrorCode::kDuplicateEdge);
  CHECK(error_of([] { make(3, {{1, 1}}); }) == ErrorCode::kSelfLoop);
  CHECK(error_of([] { make(3, {{0, 3}}); }) == ErrorCode::kInvalidArgument);
  Graph g = make(4, {{3, 0}, {0, 1}, {2, 0}});
  auto nb = g.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.max_degree() == 3);
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("distances on small graphs") {
  GeodesicIndex p3(path_graph(3));
  CHECK(p3.distance(0, 2) == 2);
  CHECK(GeodesicIndex(complete_bipartite(2, 3)).diameter() == 2);
  GeodesicIndex one(make(1, {}));
  CHECK(one.distance(0, 0) == 0);
  CHECK(one.diameter() == 0);
  Graph split = make(4, {{0, 1}, {2, 3}});
  GeodesicIndex two(split);
  CHECK(two.distance(0, 3) == kUnreachable);
  CHECK(two.diameter() == kUnreachable);
  CHECK(error_of([&] { two.count(0, 3); }) == ErrorCode::kUnreachablePair);
  CHECK(error_of([&] { enumerate_geodesics(split, 0, 2); }) == ErrorCode::kUnreachablePair);
}

TEST_CASE("geodesic enumeration and counting examples") {
  Graph c4 = cycle_graph(4);
  CHECK(enumerate_geodesics(c4, 0, 2) == std::vector<Path>{{0, 1, 2}, {0, 3, 2}});
  CHECK(count_geodesics(c4, 0, 2) == 2);
  CHECK(enumerate_geodesics(path_graph(3), 0, 2) == std::vector<Path>{{0, 1, 2}});
  CHECK(count_geodesics(path_graph(3), 0, 2) == 1);
  CHECK(enumerate_geodesics(complete_bipartite(2, 3), 0, 1).size() == 3);
  CHECK(count_geodesics(fixtures::cube(), 0, 7) == 6);
  CHECK(brute::geodesics(fixtures::cube(), 0, 7).size() == 6);
  CHECK(enumerate_geodesics(fixtures::cube(), 0, 7, 4).size() == 4);
  CHECK(interval(cycle_graph(5), 0, 2) == VertexSet{0, 1, 2});
  CHECK(interval(cycle_graph(4), 0, 2) == VertexSet{0, 1, 2, 3});
  CHECK(interval(path_graph(3), 0, 2) == VertexSet{0, 1, 2});
}

TEST_CASE("geodesic counts grow past 64 bits") {
  // A chain of 70 diamonds has 2^70 geodesics between its ends.
  const std::size_t k = 70;
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) {
    Vertex a = 3 * i, b = a + 1, c = a + 2, d = a + 3;
    e.insert(e.end(), {{a, b}, {a, c}, {b, d}, {c, d}});
  }
  Graph g = Graph::from_edges(3 * k + 1, e);
  BigCount expected = 1;
  expected <<= 70;
  CHECK(count_geodesics(g, 0, 3 * k) == expected);
}

TEST_CASE("geodesic machinery matches brute force on all connected graphs up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      GeodesicIndex index(g);
      auto fw = brute::floyd_warshall(g);
      for (Vertex u = 0; u < n; ++u) {
        auto bfs = bfs_distances(g, u);
        for (Vertex v = 0; v < n; ++v) {
          REQUIRE(index.distance(u, v) == fw[u][v]);
          REQUIRE(bfs[v] == fw[u][v]);
          CHECK(index.distance(u, v) == index.distance(v, u));
          auto paths = brute::geodesics(g, u, v);
          REQUIRE(index.enumerate(u, v) == paths);
          REQUIRE(index.count(u, v) == paths.size());
          std::set<Vertex> seen;
          for (const auto& p : paths) seen.insert(p.begin(), p.end());
          REQUIRE(index.interval(u, v) == VertexSet(seen.begin(), seen.end()));
          REQUIRE(index.first_geodesic(u, v) == paths.front());
          GeodesicCursor cursor(index, u, v);
          std::vector<Path> lazy;
          while (auto p = cursor.next()) lazy.push_back(*p);
          REQUIRE(lazy == paths);
          for (Vertex w = 0; w < n; ++w) CHECK(fw[u][v] <= fw[u][w] + fw[w][v]);
        }
      }
    }
  }
}

TEST_CASE("interval and count agree with enumeration on all connected graphs up to 8 vertices") {
  for (std::size_t n = 7; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      GeodesicIndex index(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          auto paths = index.enumerate(u, v);
          std::set<Vertex> seen;
          for (const auto& p : paths) seen.insert(p.begin(), p.end());
          REQUIRE(index.count(u, v) == paths.size());
          REQUIRE(index.interval(u, v) == VertexSet(seen.begin(), seen.end()));
        }
      }
    }
  }
}

TEST_CASE("BFS distances match Floyd-Warshall up to 64 vertices") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    std::size_t n = 16 + 4 * seed;
    Graph g = random_connected_graph(n, seed, 1, 12);
    GeodesicIndex index(g);
    auto fw = brute::floyd_warshall(g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) REQUIRE(index.distance(u, v) == fw[u][v]);
    }
  }
}

TEST_CASE("geodesic machinery matches brute force on random 8-vertex graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_connected_graph(8, seed);
    GeodesicIndex index(g);
    for (Vertex u = 0; u < 8; ++u) {
      for (Vertex v = u + 1; v < 8; ++v) {
        auto paths = brute::geodesics(g, u, v);
        REQUIRE(index.count(u, v) == paths.size());
        REQUIRE(index.enumerate(u, v) == paths);
        for (const auto& p : paths) CHECK(index.is_geodesic(p));
      }
    }
  }
}

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(star_graph(3)) == VertexSet{1, 2, 3});
  CHECK(simplicial_vertices(cycle_graph(4)).empty());
  CHECK(simplicial_vertices(fixtures::paw()) == VertexSet{1, 2, 3});
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) REQUIRE(simplicial_vertices(g) == brute::simplicial(g));
  }
}

TEST_CASE("cut trees of small graphs") {
  CutTree p3 = build_cut_tree(path_graph(3));
  CHECK(p3.blocks == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(p3.cut_vertices == VertexSet{1});
  CutTree c4 = build_cut_tree(cycle_graph(4));
  CHECK(c4.blocks.size() == 1);
  CHECK(c4.cut_vertices.empty());
}

TEST_CASE("cut tree of the bowtie") {
  CutTree t = build_cut_tree(fixtures::bowtie());
  CHECK(t.cut_vertices == VertexSet{2});
  CHECK(t.blocks == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
  CHECK(t.tree_edges.size() == 2);
  CHECK(t.block_degree(0) == 1);
  CHECK(error_of([] { build_cut_tree(make(4, {{0, 1}, {2, 3}})); }) == ErrorCode::kDisconnected);
}

TEST_CASE("cut tree invariants on all connected graphs up to 7 vertices") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      CutTree t = build_cut_tree(g);
      REQUIRE(t.cut_vertices == brute::cut_vertices(g));
      std::map<Edge, int> owner;
      for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        for (const Edge& e : t.block_edges[b]) {
          ++owner[e];
          CHECK(std::binary_search(t.blocks[b].begin(), t.blocks[b].end(), e.first));
          CHECK(std::binary_search(t.blocks[b].begin(), t.blocks[b].end(), e.second));
        }
      }
      REQUIRE(owner.size() == g.size());
      for (const auto& [e, c] : owner) CHECK(c == 1);
      std::vector<int> membership(n, 0);
      for (const auto& b : t.blocks) {
        for (Vertex v : b) ++membership[v];
      }
      for (Vertex v = 0; v < n; ++v) CHECK((membership[v] >= 2) == t.is_cut_vertex(v));
      // A connected tree on blocks + cut vertices has one edge fewer than nodes.
      CHECK(t.tree_edges.size() == t.blocks.size() + t.cut_vertices.size() - 1);
    }
  }
}

TEST_CASE("class checks") {
  Graph c4_chord = make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(is_chordal(c4_chord));
  CHECK(split_partition(c4_chord).has_value());
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK_FALSE(split_partition(cycle_graph(4)).has_value());
  CHECK(bipartition(complete_bipartite(2, 3)).has_value());
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
  CHECK(is_co_bipartite(complete_graph(4)));
  CHECK(is_block_graph(fixtures::bowtie()));
  CHECK(is_cactus(fixtures::bowtie()));
  CHECK_FALSE(is_block_graph(cycle_graph(4)));
  CHECK(is_cactus(cycle_graph(4)));
  CHECK_FALSE(is_cactus(c4_chord));

  GraphClass fig3 = classify(fixtures::figure3_split());
  CHECK(fig3.split);
  CHECK(fig3.chordal);
  CHECK(fig3.connected);
  auto part = split_partition(fixtures::figure3_split());
  REQUIRE(part.has_value());
  CHECK(part->clique == VertexSet{4, 5, 6});
  CHECK(part->independent == VertexSet{0, 1, 2, 3});
}

TEST_CASE("trees are block graphs and cacti") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (g.size() + 1 != n) continue;
      CHECK(is_block_graph(g));
      CHECK(is_cactus(g));
    }
  }
}

TEST_CASE("split partitions are a clique and an independent set") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      auto part = split_partition(g);
      if (!part) continue;
      for (Vertex a : part->clique) {
        for (Vertex b : part->clique) CHECK((a == b || g.has_edge(a, b)));
      }
      for (Vertex a : part->independent) {
        for (Vertex b : part->independent) CHECK_FALSE(g.has_edge(a, b));
      }
    }
  }
}

TEST_CASE("graph enumeration counts") {
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(connected_graphs(n).size() == connected[n - 1]);
    CHECK(all_graphs(n).size() == all[n - 1]);
  }
}

TEST_CASE("block graph and cactus enumeration agree with the class checks") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t blocks = 0, cacti = 0;
    for (const Graph& g : connected_graphs(n)) {
      blocks += is_block_graph(g);
      cacti += is_cactus(g);
    }
    CHECK(all_block_graphs(n).size() == blocks);
    CHECK(all_cacti(n).size() == cacti);
  }
}

TEST_CASE("canonical codes are invariant under relabeling") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_connected_graph(9, seed);
    Rng rng(seed);
    std::vector<Vertex> perm(9);
    for (Vertex i = 0; i < 9; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::vector<Edge> e;
    for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
    CHECK(canonical_code(g) == canonical_code(Graph::from_edges(9, e)));
  }
  CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(3)));
}

TEST_CASE("random generators produce their classes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CHECK(is_cactus(random_cactus(12, seed)));
    CHECK(random_cactus(12, seed).order() == 12);
    CHECK(is_block_graph(random_block_graph(10, seed)));
    CHECK(split_partition(random_split_graph(8, seed)).has_value());
    CHECK(is_connected(random_split_graph(8, seed)));
    CHECK(bipartition(random_bipartite_graph(8, seed)).has_value());
    CHECK(is_connected(random_connected_graph(8, seed)));
    CHECK(random_cactus(12, seed) == random_cactus(12, seed));
  }
}

TEST_CASE("maximum bipartite matching") {
  std::vector<BipartiteEdge> e = {{0, 0}, {0, 1}, {1, 0}};
  Matching m = maximum_bipartite_matching(2, 2, e);
  CHECK(m.size() == 2);
  CHECK(m.left_mate[1] == 0);
  CHECK(m.right_mate[1] == 0);
  CHECK(maximum_bipartite_matching(3, 0, {}).size() == 0);
  std::vector<BipartiteEdge> fork = {{0, 0}, {0, 1}};
  CHECK(maximum_bipartite_matching(1, 2, fork).size() == 1);
  std::vector<BipartiteEdge> hexagon = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}};
  CHECK(maximum_bipartite_matching(3, 3, hexagon).size() == 3);
  CHECK(brute::matching_size(3, 3, hexagon) == 3);
  std::vector<BipartiteEdge> star = {{0, 0}, {1, 0}, {2, 0}};
  CHECK(maximum_bipartite_matching(3, 1, star).size() == 1);
}

TEST_CASE("matching is maximum and valid on random bipartite graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t left = rng.range(1, 6), right = rng.range(1, 6);
    std::vector<BipartiteEdge> e;
    for (std::uint32_t a = 0; a < left; ++a) {
      for (std::uint32_t b = 0; b < right; ++b) {
        if (rng.chance(1, 3)) e.emplace_back(a, b);
      }
    }
    if (e.size() > 14) e.resize(14);
    Matching m = maximum_bipartite_matching(left, right, e);
    REQUIRE(m.size() == brute::matching_size(left, right, e));
    std::set<std::uint32_t> ls, rs;
    for (auto [a, b] : m.pairs) {
      CHECK(std::find(e.begin(), e.end(), BipartiteEdge{a, b}) != e.end());
      CHECK(ls.insert(a).second);
      CHECK(rs.insert(b).second);
      CHECK(m.left_mate[a] == b);
      CHECK(m.right_mate[b] == a);
    }
  }
}

TEST_CASE("induced subgraph keeps the edges inside") {
  Graph g = induced_subgraph(cycle_graph(5), {0, 1, 2});
  CHECK(g == path_graph(3));
}
