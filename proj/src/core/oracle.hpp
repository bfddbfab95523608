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

#ifndef SGEO_CORE_ORACLE_HPP_
#define SGEO_CORE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "core/graph.hpp"

namespace sgeo {

enum class OracleFamily { kAllGraphs, kCactus, kBlock, kSplit, kDiameter2 };
const char* oracle_family_name(OracleFamily f);
OracleFamily parse_oracle_family(std::string_view name);

struct OracleOptions {
  OracleFamily family = OracleFamily::kAllGraphs;
  std::size_t max_n = 6;
  // Random instances on top of the exhaustive ones.
  std::size_t seeds = 0;
  std::uint64_t base_seed = 1;
  std::size_t threads = 1;
  // Counterexamples are written here as <family>-<i>.graph / .set when set.
  std::optional<std::string> archive_dir;
};

struct Disagreement {
  std::string check;
  Graph graph;
  VertexSet set;
  std::string detail;
  std::vector<std::string> archived;
};

struct OracleReport {
  OracleFamily family = OracleFamily::kAllGraphs;
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::size_t certificates_checked = 0;
  std::vector<Disagreement> disagreements;
};

// Cross-checks the specialised algorithms of a family against the exact
// recognizer and solver. Subsets are enumerated exhaustively up to n = 8.
OracleReport run_oracle(const OracleOptions& options);

nlohmann::json oracle_report_to_json(const OracleReport& r);
std::string format_oracle_report(const OracleReport& r);

}  // namespace sgeo

#endif  // SGEO_CORE_ORACLE_HPP_
