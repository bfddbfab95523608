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

#ifndef SGEO_CORE_SOLVERS_HPP_
#define SGEO_CORE_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/assignment.hpp"
#include "core/geodesics.hpp"
#include "core/graph.hpp"
#include "core/recognition.hpp"

namespace sgeo {

struct SolveResult {
  // For optimisation runs kYes means sg_value is exact. For decision runs
  // (a bound k was given) kYes means sg(g) <= k.
  Verdict verdict = Verdict::kNo;
  std::optional<std::size_t> sg_value;
  VertexSet witness;
  std::optional<Assignment> certificate;
  std::uint64_t nodes_explored = 0;
  // Largest size ruled out so far plus one; meaningful for kUnknown.
  std::size_t lower_bound = 0;
  std::vector<std::string> diagnostics;
};

// Tries candidate sets by increasing size, lexicographically within a size.
// Every set contains all simplicial vertices. With k, stops after size k.
SolveResult solve_exact(const Graph& g, std::optional<std::size_t> k = std::nullopt,
                        std::optional<std::uint64_t> budget = std::nullopt);

// Block graphs: the non-cut vertices.
SolveResult solve_block(const Graph& g);

// Cacti: leaf-block and internal-cycle rules on the cut tree.
SolveResult solve_cactus(const Graph& g);

// A strong geodetic assignment for s in a cactus, or nullopt if none exists.
// Geodesics in a cactus differ only at antipodal crossings of even cycles; the
// choice of side is searched per cycle.
std::optional<Assignment> cactus_assignment(const GeodesicIndex& index, const VertexSet& s);

enum class KernelVerdict { kReject, kContinue };

// REJECT iff n > C(k,2) * (D - 1) + k, which no k-set can cover.
KernelVerdict kernel_check(const Graph& g, std::size_t k);
KernelVerdict kernel_check(std::size_t n, std::size_t k, Distance diameter);

// Kernel check followed by exact search restricted to sets of size <= k.
SolveResult solve_fpt(const Graph& g, std::size_t k,
                      std::optional<std::uint64_t> budget = std::nullopt);

enum class Solver { kAuto, kExact, kBlock, kCactus, kFpt };
const char* solver_name(Solver s);

// kAuto uses the block, then cactus solver when the class fits, else exact.
SolveResult solve(const Graph& g, Solver algorithm, std::optional<std::size_t> k = std::nullopt,
                  std::optional<std::uint64_t> budget = std::nullopt, Solver* used = nullptr);

nlohmann::json solve_to_json(const SolveResult& r);

}  // namespace sgeo

#endif  // SGEO_CORE_SOLVERS_HPP_
