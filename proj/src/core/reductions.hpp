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

#ifndef SGEO_CORE_REDUCTIONS_HPP_
#define SGEO_CORE_REDUCTIONS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/assignment.hpp"
#include "core/graph.hpp"

namespace sgeo {

// Clauses hold DIMACS literals: +v or -v for variable v in 1..n_vars.
struct Sat3Formula {
  std::size_t n_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const Sat3Formula&, const Sat3Formula&) = default;
};

Sat3Formula parse_dimacs(std::string_view text);
std::string write_dimacs(const Sat3Formula& f);

// Literals in range, no variable twice in a clause, clauses of at most three
// literals, each variable at most three times.
void validate_formula(const Sat3Formula& f);
bool is_normalized(const Sat3Formula& f);
// truth[v - 1] is the value of variable v.
bool satisfies(const Sat3Formula& f, const std::vector<bool>& truth);

struct NormalizedFormula {
  Sat3Formula formula;
  std::vector<std::size_t> original_var;      // 1-based source variable per new variable
  std::vector<std::optional<bool>> fixed;     // per source variable
  bool unsat = false;                         // an empty clause was present
};

// Repeatedly fixes variables that occur with one polarity only and drops the
// clauses they satisfy, then renumbers the survivors.
NormalizedFormula normalize_3sat3(const Sat3Formula& f);
// Truth for the source variables given truth for the normalized ones.
std::vector<bool> lift_truth(const NormalizedFormula& n, const std::vector<bool>& truth);

enum class InstanceKind { kSat, kSatBoundedDegree, kCoBipartite, kChordal, kPendant };

struct SatGadget {
  Vertex p, q, x, x_prime, xbar, xbar_prime, w, wbar;
};

struct SatLayout {
  std::vector<SatGadget> gadgets;
  std::vector<Vertex> clauses;
  Vertex z = 0;
  Sat3Formula encoded;                 // the formula after padding
  std::size_t source_vars = 0;
  std::vector<bool> padding_truth;     // satisfying values for the padded variables
};

struct LabeledInstance {
  InstanceKind kind = InstanceKind::kSat;
  Graph graph;
  VertexSet set;                       // S for recognition instances, pendants for kPendant
  std::size_t k = 0;
  std::vector<std::string> labels;
  Graph source;                        // input graph of graph reductions
  std::vector<Vertex> source_ids;      // id in `graph` of each source vertex
  std::optional<Vertex> universal;
  std::optional<SatLayout> sat;
};

std::string write_labels(const std::vector<std::string>& labels);
std::vector<std::string> parse_labels(std::string_view text, std::size_t n);

LabeledInstance sat3_to_sgr(const Sat3Formula& f);
// Pads to power-of-two variable and clause counts (at least two variables),
// routes z, P and Q through binary trees and stretches the p/q literal edges
// to log2(n) edges.
LabeledInstance sat3_to_sgr_bounded_degree(const Sat3Formula& f);

Assignment translate_sat_witness(const Sat3Formula& f, const std::vector<bool>& truth,
                                 const LabeledInstance& inst);
// Reads x_i as true iff the p_i,z path passes through x_i.
std::vector<bool> extract_sat_witness(const LabeledInstance& inst, const Assignment& a);

LabeledInstance domset_bipartite_to_sg_cobipartite(const Graph& g, std::size_t k);
LabeledInstance domset_split_to_sg_chordal(const Graph& g, std::size_t k);

// Intersects sgset (minus the universal vertex) with the source vertices.
// Unless `trusted`, sgset is first re-verified with the exact recognizer.
VertexSet extract_domset_witness(const LabeledInstance& inst, const VertexSet& sgset,
                                 bool trusted = false);
bool is_dominating_set(const Graph& g, const VertexSet& d);

// Pendant x_v for each v in s, numbered n, n+1, ... in the order of s.
LabeledInstance sgr_to_sg(const Graph& g, const VertexSet& s);
// Maps an assignment for the pendant set back to one for s.
Assignment strip_pendant_assignment(const LabeledInstance& inst, const Assignment& a);

}  // namespace sgeo

#endif  // SGEO_CORE_REDUCTIONS_HPP_
