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
#include <string>

#include "doctest.h"

#include "core/assignment.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/geodesics.hpp"
#include "core/recognition.hpp"
#include "core/reductions.hpp"
#include "core/solvers.hpp"
#include "core/structure.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace sgeo;
using fixtures::error_of;
using fixtures::make;

namespace {

VertexSet with_prefix(const LabeledInstance& inst, const std::string& prefix) {
  VertexSet out;
  for (Vertex v = 0; v < inst.labels.size(); ++v) {
    if (inst.labels[v].rfind(prefix, 0) == 0) out.push_back(v);
  }
  return out;
}

VertexSet merged(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("DIMACS parsing") {
  Sat3Formula f = parse_dimacs("c comment\np cnf 2 3\n1 -2 0\n1 2 0\n-1 -2 0\n");
  CHECK(f == fixtures::figure1_formula());
  CHECK(parse_dimacs(write_dimacs(f)) == f);
  CHECK(parse_dimacs("p cnf 2 1\n1\n2 0\n") == Sat3Formula{2, {{1, 2}}});
  CHECK(error_of([] { parse_dimacs("1 2 0\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_dimacs("p cnf 2 2\n1 2 0\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"); }) == ErrorCode::kClauseTooLarge);
  CHECK(error_of([] { parse_dimacs("p cnf 1 1\n2 0\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { validate_formula(Sat3Formula{1, {{2}}}); }) == ErrorCode::kInvalidFormula);
  CHECK(error_of([] { parse_dimacs("p cnf 1 4\n1 0\n1 0\n-1 0\n1 0\n"); }) ==
        ErrorCode::kInvalidFormula);
  try {
    parse_dimacs("p cnf 2 1\n1 y 0\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.line().value_or(0) == 2);
  }
}

TEST_CASE("normalize_3sat3 examples") {
  NormalizedFormula single = normalize_3sat3(Sat3Formula{2, {{1, 2}}});
  CHECK(single.formula.clauses.empty());
  CHECK_FALSE(single.unsat);

  NormalizedFormula fixpoint = normalize_3sat3(fixtures::figure1_formula());
  CHECK(fixpoint.formula == fixtures::figure1_formula());
  CHECK(is_normalized(fixpoint.formula));

  Sat3Formula f{2, {{1, 2}, {-1, 2}}};
  NormalizedFormula gone = normalize_3sat3(f);
  CHECK(gone.formula.clauses.empty());
  CHECK(gone.fixed[1] == true);
  std::vector<bool> lifted = lift_truth(gone, {});
  CHECK(satisfies(f, lifted));
  CHECK(brute::satisfiable(f));

  NormalizedFormula empty = normalize_3sat3(Sat3Formula{1, {{}}});
  CHECK(empty.unsat);
}

TEST_CASE("normalization is equisatisfiable and lifts witnesses") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = rng.range(1, 6);
    Sat3Formula f{n, {}};
    std::vector<int> uses(n + 1, 0);
    std::size_t m = rng.range(1, 6);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> clause;
      std::size_t len = rng.range(2, 3);
      for (std::size_t t = 0; t < len; ++t) {
        int v = static_cast<int>(rng.range(1, n));
        if (uses[v] >= 3) continue;
        bool dup = false;
        for (int l : clause) dup = dup || std::abs(l) == v;
        if (dup) continue;
        ++uses[v];
        clause.push_back(rng.chance(1, 2) ? v : -v);
      }
      if (!clause.empty()) f.clauses.push_back(clause);
    }
    validate_formula(f);
    NormalizedFormula nf = normalize_3sat3(f);
    REQUIRE(is_normalized(nf.formula));
    REQUIRE(brute::satisfiable(f) == brute::satisfiable(nf.formula));
    if (auto t = brute::satisfying_assignment(nf.formula)) CHECK(satisfies(f, lift_truth(nf, *t)));
  }
}

TEST_CASE("sat3_to_sgr on the figure 1 formula") {
  LabeledInstance inst = sat3_to_sgr(fixtures::figure1_formula());
  CHECK(inst.graph.order() == 24);
  CHECK(inst.graph.size() == 33);
  CHECK(inst.set.size() == 5);
  CHECK(with_prefix(inst, "y_").size() == 4);
  CHECK(bipartition(inst.graph).has_value());
  CHECK(is_connected(inst.graph));
  REQUIRE(inst.sat.has_value());
  VertexSet expected;
  for (const SatGadget& gd : inst.sat->gadgets) {
    expected.push_back(gd.p);
    expected.push_back(gd.q);
  }
  expected.push_back(inst.sat->z);
  std::sort(expected.begin(), expected.end());
  CHECK(inst.set == expected);
  CHECK(error_of([] { sat3_to_sgr(Sat3Formula{2, {{1, 2}}}); }) == ErrorCode::kNotNormalized);
}

TEST_CASE("sat3_to_sgr y-vertex count") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Sat3Formula f = random_3sat3(2 + seed % 4, seed);
    LabeledInstance inst = sat3_to_sgr(f);
    std::size_t n = f.n_vars;
    CHECK(with_prefix(inst, "y_").size() == 2 * n * (n - 1));
    CHECK(inst.graph.order() == 8 * n + f.clauses.size() + 1 + 2 * n * (n - 1));
    CHECK(bipartition(inst.graph).has_value());
  }
}

TEST_CASE("translate_sat_witness on the figure 1 instance") {
  Sat3Formula f = fixtures::figure1_formula();
  LabeledInstance inst = sat3_to_sgr(f);
  Assignment a = translate_sat_witness(f, {true, false}, inst);
  CHECK(check_assignment(inst.graph, inst.set, a));
  CHECK(extract_sat_witness(inst, a) == std::vector<bool>{true, false});
  CHECK(error_of([&] { translate_sat_witness(f, {true, true}, inst); }) ==
        ErrorCode::kWitnessDoesNotSatisfy);
  CHECK(error_of([&] { translate_sat_witness(f, {false, false}, inst); }) ==
        ErrorCode::kWitnessDoesNotSatisfy);
}

TEST_CASE("bounded-degree construction on the figure 2 formula") {
  Sat3Formula f = fixtures::figure2_formula();
  LabeledInstance inst = sat3_to_sgr_bounded_degree(f);
  CHECK(inst.graph.max_degree() <= 4);
  CHECK(bipartition(inst.graph).has_value());
  CHECK(inst.set.size() == 5);
  REQUIRE(inst.sat.has_value());
  for (Vertex c : inst.sat->clauses) CHECK(inst.graph.degree(c) <= 4);
  Assignment a = translate_sat_witness(f, {true, false}, inst);
  CHECK(check_assignment(inst.graph, inst.set, a));
  CHECK(extract_sat_witness(inst, a) == std::vector<bool>{true, false});
  CHECK(error_of([] { sat3_to_sgr_bounded_degree(Sat3Formula{2, {{1, 2}}}); }) ==
        ErrorCode::kNotNormalized);
}

TEST_CASE("bounded-degree construction stretches literal edges for four variables") {
  Sat3Formula f{4, {{1, 2}, {-1, -2}, {3, 4}, {-3, -4}}};
  LabeledInstance inst = sat3_to_sgr_bounded_degree(f);
  const SatGadget& g1 = inst.sat->gadgets[0];
  GeodesicIndex index(inst.graph);
  CHECK(index.distance(g1.p, g1.x) == 2);
  CHECK(index.distance(g1.q, g1.x_prime) == 2);
  CHECK_FALSE(inst.graph.has_edge(g1.p, g1.x));
  CHECK(with_prefix(inst, "path_p1_x1_").size() == 1);
  CHECK(inst.graph.max_degree() <= 4);
  CHECK(bipartition(inst.graph).has_value());
}

TEST_CASE("SAT witnesses translate for random satisfiable formulas") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Sat3Formula f = random_3sat3(2 + seed % 5, seed);
    auto truth = brute::satisfying_assignment(f);
    if (!truth) continue;
    LabeledInstance plain = sat3_to_sgr(f);
    Assignment a = translate_sat_witness(f, *truth, plain);
    REQUIRE(check_assignment(plain.graph, plain.set, a));
    CHECK(satisfies(f, extract_sat_witness(plain, a)));
    LabeledInstance bounded = sat3_to_sgr_bounded_degree(f);
    CHECK(bounded.graph.max_degree() <= 4);
    CHECK(bipartition(bounded.graph).has_value());
    Assignment b = translate_sat_witness(f, *truth, bounded);
    REQUIRE(check_assignment(bounded.graph, bounded.set, b));
    CHECK(satisfies(f, extract_sat_witness(bounded, b)));
  }
}

TEST_CASE("labels round-trip") {
  LabeledInstance inst = sat3_to_sgr(fixtures::figure1_formula());
  CHECK(parse_labels(write_labels(inst.labels), inst.graph.order()) == inst.labels);
  CHECK(error_of([] { parse_labels("0 a\n", 2); }).has_value());
  CHECK(error_of([] { parse_labels("0 a\n0 b\n", 2); }).has_value());
}

TEST_CASE("co-bipartite construction from C4") {
  LabeledInstance inst = domset_bipartite_to_sg_cobipartite(cycle_graph(4), 2);
  CHECK(inst.graph.order() == 10);
  CHECK(inst.k == 6);
  CHECK(GeodesicIndex(inst.graph).diameter() == 2);
  CHECK(is_co_bipartite(inst.graph));
  VertexSet copies = merged(with_prefix(inst, "abar_"), with_prefix(inst, "bbar_"));
  CHECK(copies.size() == 4);
  VertexSet simp = simplicial_vertices(inst.graph);
  CHECK(std::includes(simp.begin(), simp.end(), copies.begin(), copies.end()));

  VertexSet sg = merged(copies, {inst.source_ids[0], inst.source_ids[1]});
  RecognitionResult r = recognize_general(inst.graph, sg);
  CHECK(r.verdict == Verdict::kYes);
  VertexSet d = extract_domset_witness(inst, sg);
  CHECK(d == VertexSet{0, 1});
  CHECK(is_dominating_set(cycle_graph(4), d));

  CHECK(error_of([] { domset_bipartite_to_sg_cobipartite(cycle_graph(5), 2); }) ==
        ErrorCode::kNotBipartite);
  CHECK(error_of([] { domset_bipartite_to_sg_cobipartite(path_graph(3), 1); }) ==
        ErrorCode::kPartTooSmall);
}

TEST_CASE("chordal construction from the figure 3 split graph") {
  Graph g = fixtures::figure3_split();
  LabeledInstance inst = domset_split_to_sg_chordal(g, 2);
  CHECK(inst.graph.order() == 15);
  CHECK(inst.k == 9);
  CHECK(GeodesicIndex(inst.graph).diameter() == 2);
  CHECK(is_chordal(inst.graph));
  REQUIRE(inst.universal.has_value());
  VertexSet pendants = merged(with_prefix(inst, "x_"), with_prefix(inst, "y_"));
  CHECK(pendants.size() == 7);
  VertexSet simp = simplicial_vertices(inst.graph);
  CHECK(std::includes(simp.begin(), simp.end(), pendants.begin(), pendants.end()));

  VertexSet sg = merged(pendants, {inst.source_ids[4], inst.source_ids[5]});
  CHECK(sg.size() == 9);
  RecognitionResult r = recognize_general(inst.graph, sg);
  REQUIRE(r.verdict == Verdict::kYes);
  CHECK(check_assignment(inst.graph, sg, *r.certificate));
  CHECK(extract_domset_witness(inst, sg) == VertexSet{4, 5});
  // The universal vertex is dropped before intersecting.
  VertexSet with_z = merged(sg, {*inst.universal});
  if (recognize_general(inst.graph, with_z).verdict == Verdict::kYes) {
    CHECK(extract_domset_witness(inst, with_z) == VertexSet{4, 5});
  }
  CHECK(error_of([] { domset_split_to_sg_chordal(cycle_graph(4), 2); }) == ErrorCode::kNotSplit);
}

TEST_CASE("extract_domset_witness rejects sets that are not strong geodetic") {
  LabeledInstance inst = domset_split_to_sg_chordal(fixtures::figure3_split(), 2);
  CHECK(error_of([&] { extract_domset_witness(inst, {0, 1}); }) ==
        ErrorCode::kNotAStrongGeodeticSet);
}

TEST_CASE("pendant reduction") {
  LabeledInstance p3 = sgr_to_sg(path_graph(3), {0, 2});
  CHECK(p3.graph.order() == 5);
  CHECK(p3.k == 2);
  CHECK(p3.set == VertexSet{3, 4});
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_cactus(9, seed);
    VertexSet s = {0, 3, 5, 8};
    LabeledInstance inst = sgr_to_sg(g, s);
    CHECK(is_cactus(inst.graph));
    std::size_t fresh = 0;
    VertexSet simp = simplicial_vertices(inst.graph);
    for (Vertex v : inst.set) {
      CHECK(inst.graph.degree(v) == 1);
      fresh += std::binary_search(simp.begin(), simp.end(), v);
    }
    CHECK(fresh == s.size());
  }
  LabeledInstance c5 = sgr_to_sg(cycle_graph(5), {0, 2, 4});
  SolveResult opt = solve_exact(c5.graph);
  REQUIRE(opt.certificate.has_value());
  REQUIRE(opt.witness == c5.set);
  Assignment back = strip_pendant_assignment(c5, *opt.certificate);
  CHECK(check_assignment(cycle_graph(5), {0, 2, 4}, back));
}

TEST_CASE("dominating-set reductions agree with brute force on small graphs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::size_t gamma = brute::domination_number(g);
      auto parts = bipartition(g);
      if (parts && parts->left.size() >= 2 && parts->right.size() >= 2) {
        for (std::size_t k = 0; k <= n; ++k) {
          LabeledInstance inst = domset_bipartite_to_sg_cobipartite(g, k);
          CHECK((gamma <= k) == (solve_exact(inst.graph, inst.k).verdict == Verdict::kYes));
        }
      }
      if (split_partition(g)) {
        for (std::size_t k = 0; k <= n; ++k) {
          LabeledInstance inst = domset_split_to_sg_chordal(g, k);
          CHECK((gamma <= k) == (solve_exact(inst.graph, inst.k).verdict == Verdict::kYes));
        }
      }
    }
  }
}
