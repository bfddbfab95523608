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

#include <string>

#include "doctest.h"

#include "core/assignment.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/recognition.hpp"
#include "core/solvers.hpp"
#include "core/structure.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace sgeo;
using fixtures::error_of;
using fixtures::make;

namespace {

void require_witness(const Graph& g, const SolveResult& r) {
  REQUIRE(r.sg_value.has_value());
  CHECK(r.witness.size() == *r.sg_value);
  REQUIRE(r.certificate.has_value());
  REQUIRE(check_assignment(g, r.witness, *r.certificate));
  CHECK(recognize_general(g, r.witness).verdict == Verdict::kYes);
}

}  // namespace

TEST_CASE("solve_exact examples") {
  SolveResult k23 = solve_exact(complete_bipartite(2, 3));
  CHECK(k23.sg_value == 3);
  CHECK(k23.witness == VertexSet{2, 3, 4});
  require_witness(complete_bipartite(2, 3), k23);
  SolveResult p5 = solve_exact(path_graph(5));
  CHECK(p5.sg_value == 2);
  CHECK(p5.witness == VertexSet{0, 4});
  SolveResult c5 = solve_exact(cycle_graph(5));
  CHECK(c5.sg_value == 3);
  CHECK(brute::sg(cycle_graph(5)) == 3);
  require_witness(cycle_graph(5), c5);
  CHECK(solve_exact(make(1, {})).sg_value == 1);
  CHECK(error_of([] { solve_exact(make(3, {{0, 1}})); }) == ErrorCode::kDisconnected);
}

TEST_CASE("solve_exact matches brute force on all connected graphs up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      SolveResult r = solve_exact(g);
      REQUIRE(r.verdict == Verdict::kYes);
      REQUIRE(r.sg_value == brute::sg(g));
      require_witness(g, r);
      CHECK(*r.sg_value >= simplicial_vertices(g).size());
      if (n >= 2) CHECK(*r.sg_value >= 2);
      auto simp = simplicial_vertices(g);
      CHECK(std::includes(r.witness.begin(), r.witness.end(), simp.begin(), simp.end()));
    }
  }
}

TEST_CASE("solve_exact decision form and budget") {
  Graph k24 = complete_bipartite(2, 4);
  CHECK(solve_exact(k24, 3).verdict == Verdict::kNo);
  SolveResult yes = solve_exact(k24, 4);
  CHECK(yes.verdict == Verdict::kYes);
  CHECK(yes.sg_value == 4);
  SolveResult cut = solve_exact(fixtures::cube(), std::nullopt, 2);
  CHECK(cut.verdict == Verdict::kUnknown);
  CHECK_FALSE(cut.sg_value.has_value());
  CHECK(cut.lower_bound >= 2);
}

TEST_CASE("solve_block examples") {
  SolveResult tree = solve_block(make(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}));
  CHECK(tree.witness == VertexSet{0, 2, 4, 5});
  SolveResult k4 = solve_block(complete_graph(4));
  CHECK(k4.witness == VertexSet{0, 1, 2, 3});
  SolveResult bow = solve_block(fixtures::bowtie());
  CHECK(bow.sg_value == 4);
  CHECK(bow.witness == VertexSet{0, 1, 3, 4});
  CHECK(solve_exact(fixtures::bowtie()).sg_value == 4);
  require_witness(fixtures::bowtie(), bow);
  CHECK(error_of([] { solve_block(cycle_graph(4)); }) == ErrorCode::kNotBlockGraph);
}

TEST_CASE("solve_block matches solve_exact on block graphs") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : all_block_graphs(n)) {
      SolveResult r = solve_block(g);
      REQUIRE(r.sg_value == solve_exact(g).sg_value);
      require_witness(g, r);
    }
  }
}

TEST_CASE("solve_cactus examples") {
  SolveResult c6 = solve_cactus(cycle_graph(6));
  CHECK(c6.sg_value == 3);
  CHECK(solve_exact(cycle_graph(6)).sg_value == 3);
  require_witness(cycle_graph(6), c6);
  SolveResult bow = solve_cactus(fixtures::bowtie());
  CHECK(bow.sg_value == 4);
  require_witness(fixtures::bowtie(), bow);
  SolveResult p4 = solve_cactus(path_graph(4));
  CHECK(p4.witness == VertexSet{0, 3});
  CHECK(solve_cactus(path_graph(2)).sg_value == 2);
  CHECK(solve_cactus(make(1, {})).sg_value == 1);
  CHECK(error_of([] { solve_cactus(complete_graph(4)); }) == ErrorCode::kNotCactus);
}

TEST_CASE("solve_cactus matches solve_exact on cycles and small cacti") {
  for (std::size_t n = 3; n <= 9; ++n) {
    SolveResult r = solve_cactus(cycle_graph(n));
    REQUIRE(r.sg_value == solve_exact(cycle_graph(n)).sg_value);
    require_witness(cycle_graph(n), r);
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_cacti(n)) {
      SolveResult r = solve_cactus(g);
      REQUIRE(r.sg_value == solve_exact(g).sg_value);
      require_witness(g, r);
    }
  }
}

TEST_CASE("cactus_assignment finds the even-cycle crossings") {
  Graph c6_graph = cycle_graph(6), c4_graph = cycle_graph(4);
  GeodesicIndex c6(c6_graph);
  auto a = cactus_assignment(c6, {0, 2, 4});
  REQUIRE(a.has_value());
  CHECK(check_assignment(c6, {0, 2, 4}, *a));
  GeodesicIndex c4(c4_graph);
  CHECK_FALSE(cactus_assignment(c4, {0, 2}).has_value());
  auto both = cactus_assignment(c4, {0, 1, 2});
  REQUIRE(both.has_value());
  CHECK(check_assignment(c4, {0, 1, 2}, *both));
}

TEST_CASE("kernel_check formula") {
  CHECK(kernel_check(10, 3, 2) == KernelVerdict::kReject);
  CHECK(kernel_check(6, 3, 2) == KernelVerdict::kContinue);
  CHECK(kernel_check(7, 3, 2) == KernelVerdict::kReject);
  CHECK(kernel_check(1, 0, 1) == KernelVerdict::kReject);
  CHECK(kernel_check(1, 1, 1) == KernelVerdict::kContinue);
  // No overflow for large parameters.
  CHECK(kernel_check(1000000, 1u << 31, 1u << 30) == KernelVerdict::kContinue);
  CHECK(kernel_check(complete_bipartite(2, 3), 2) == KernelVerdict::kReject);
}

TEST_CASE("solve_fpt examples") {
  Graph k23 = complete_bipartite(2, 3);
  CHECK(solve_fpt(k23, 2).verdict == Verdict::kNo);
  SolveResult yes = solve_fpt(k23, 3);
  CHECK(yes.verdict == Verdict::kYes);
  require_witness(k23, yes);
  SolveResult rejected = solve_fpt(complete_bipartite(2, 8), 2);
  CHECK(rejected.verdict == Verdict::kNo);
  CHECK(rejected.nodes_explored == 0);
  CHECK_FALSE(rejected.diagnostics.empty());
}

TEST_CASE("kernel rejection implies a NO answer on graphs up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      std::size_t sg = *solve_exact(g).sg_value;
      for (std::size_t k = 0; k <= 4; ++k) {
        if (kernel_check(g, k) == KernelVerdict::kReject) REQUIRE(sg > k);
      }
    }
  }
}

TEST_CASE("solve dispatch") {
  Solver used = Solver::kAuto;
  solve(fixtures::bowtie(), Solver::kAuto, std::nullopt, std::nullopt, &used);
  CHECK(used == Solver::kBlock);
  solve(cycle_graph(6), Solver::kAuto, std::nullopt, std::nullopt, &used);
  CHECK(used == Solver::kCactus);
  solve(complete_bipartite(2, 3), Solver::kAuto, std::nullopt, std::nullopt, &used);
  CHECK(used == Solver::kExact);
  CHECK(solve(cycle_graph(6), Solver::kCactus, 2).verdict == Verdict::kNo);
  CHECK(solve(cycle_graph(6), Solver::kCactus, 3).verdict == Verdict::kYes);
  CHECK(error_of([] { solve(cycle_graph(6), Solver::kFpt); }) == ErrorCode::kInvalidArgument);
  CHECK(std::string(solver_name(Solver::kFpt)) == "fpt");
}

TEST_CASE("solve JSON fields") {
  nlohmann::json j = solve_to_json(solve_exact(path_graph(3)));
  CHECK(j["verdict"] == "YES");
  CHECK(j["sg"] == 2);
  CHECK(j["set"] == nlohmann::json::array({0, 2}));
  CHECK(j["entries"].size() == 1);
  CHECK(j["sg"].is_number());
}
