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

#include "sgeo/sgeo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/assignment.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/geodesics.hpp"
#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/recognition.hpp"
#include "core/reductions.hpp"
#include "core/solvers.hpp"
#include "core/structure.hpp"

struct sgeo_graph {
  sgeo::Graph g;
};

struct sgeo_result {
  sgeo::Verdict verdict = sgeo::Verdict::kNo;
  std::optional<std::size_t> value;
  sgeo::VertexSet set;
  std::optional<sgeo::Assignment> certificate;
  std::uint64_t nodes = 0;
  std::string algorithm;
  std::vector<std::string> diagnostics;
  nlohmann::json json;
};

struct sgeo_formula {
  sgeo::Sat3Formula f;
};

struct sgeo_instance {
  sgeo::LabeledInstance inst;
  sgeo_graph graph;
};

struct sgeo_oracle_report {
  sgeo::OracleReport report;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;

sgeo_status fail(sgeo_status status, const std::string& message, std::size_t line = 0) {
  g_last_error = message;
  g_last_line = line;
  return status;
}

template <typename F>
sgeo_status guard(F&& body) {
  try {
    g_last_error.clear();
    g_last_line = 0;
    body();
    return SGEO_OK;
  } catch (const sgeo::Error& e) {
    return fail(static_cast<sgeo_status>(e.code()), e.what(), e.line().value_or(0));
  } catch (const std::bad_alloc&) {
    return fail(SGEO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SGEO_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw sgeo::Error(sgeo::ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uint32_t* dup_set(const sgeo::VertexSet& s, std::size_t* count) {
  auto* out = static_cast<uint32_t*>(std::malloc(std::max<std::size_t>(s.size(), 1) * sizeof(uint32_t)));
  if (!out) throw std::bad_alloc();
  std::copy(s.begin(), s.end(), out);
  *count = s.size();
  return out;
}

sgeo::VertexSet to_set(const sgeo_graph* g, const uint32_t* set, std::size_t count) {
  require(set || count == 0, "set pointer is null");
  return sgeo::make_vertex_set(std::vector<sgeo::Vertex>(set, set + count), g->g.order());
}

std::optional<std::uint64_t> to_budget(uint64_t budget) {
  return budget ? std::optional<std::uint64_t>(budget) : std::nullopt;
}

}  // namespace

extern "C" {

const char* sgeo_version(void) { return "0.1.0"; }

const char* sgeo_status_name(sgeo_status status) {
  if (status == SGEO_OK) return "Ok";
  if (status == SGEO_ERR_INTERNAL) return "Internal";
  if (status >= 1 && status <= 20) {
    return sgeo::error_code_name(static_cast<sgeo::ErrorCode>(status));
  }
  return "Unknown";
}

const char* sgeo_last_error(void) { return g_last_error.c_str(); }
size_t sgeo_last_error_line(void) { return g_last_line; }
void sgeo_string_free(char* s) { std::free(s); }
void sgeo_set_free(uint32_t* set) { std::free(set); }

sgeo_status sgeo_graph_parse(const char* text, sgeo_graph** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new sgeo_graph{sgeo::parse_graph(text)};
  });
}

sgeo_status sgeo_graph_from_edges(size_t n, const uint32_t* endpoints, size_t m,
                                  sgeo_graph** out) {
  return guard([&] {
    require(out && (endpoints || m == 0), "null argument");
    std::vector<sgeo::Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      uint32_t a = endpoints[2 * i], b = endpoints[2 * i + 1];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    *out = new sgeo_graph{sgeo::Graph::from_edges(n, edges)};
  });
}

void sgeo_graph_free(sgeo_graph* g) { delete g; }
size_t sgeo_graph_order(const sgeo_graph* g) { return g ? g->g.order() : 0; }
size_t sgeo_graph_size(const sgeo_graph* g) { return g ? g->g.size() : 0; }

sgeo_status sgeo_graph_write(const sgeo_graph* g, char** out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = dup_string(sgeo::write_graph(g->g));
  });
}

sgeo_status sgeo_classify(const sgeo_graph* g, sgeo_class_info* out) {
  return guard([&] {
    require(g && out, "null argument");
    sgeo::GraphClass c = sgeo::classify(g->g);
    *out = {c.connected, c.bipartite, c.co_bipartite, c.chordal, c.split, c.block, c.cactus,
            c.diameter};
  });
}

sgeo_status sgeo_count_geodesics(const sgeo_graph* g, uint32_t u, uint32_t v, char** out) {
  return guard([&] {
    require(g && out, "null argument");
    require(u < g->g.order() && v < g->g.order(), "vertex out of range");
    *out = dup_string(sgeo::count_geodesics(g->g, u, v).str());
  });
}

sgeo_status sgeo_set_parse(const sgeo_graph* g, const char* text, uint32_t** out,
                           size_t* count) {
  return guard([&] {
    require(g && text && out && count, "null argument");
    *out = dup_set(sgeo::parse_vertex_set(text, g->g.order()), count);
  });
}

sgeo_status sgeo_recognize(const sgeo_graph* g, const uint32_t* set, size_t count,
                           sgeo_recognizer algorithm, uint64_t budget, sgeo_result** out) {
  return guard([&] {
    require(g && out, "null argument");
    require(algorithm >= SGEO_RECOGNIZE_AUTO && algorithm <= SGEO_RECOGNIZE_CACTUS,
            "unknown recognizer");
    sgeo::VertexSet s = to_set(g, set, count);
    sgeo::Recognizer used = sgeo::Recognizer::kAuto;
    sgeo::RecognitionResult r = sgeo::recognize(
        g->g, s, static_cast<sgeo::Recognizer>(algorithm), to_budget(budget), &used);
    auto* res = new sgeo_result;
    res->verdict = r.verdict;
    res->set = s;
    res->certificate = r.certificate;
    res->nodes = r.nodes_explored;
    res->algorithm = sgeo::recognizer_name(used);
    res->diagnostics = r.diagnostics;
    res->json = sgeo::recognition_to_json(r, s);
    res->json["algorithm"] = res->algorithm;
    *out = res;
  });
}

sgeo_status sgeo_verify_certificate(const sgeo_graph* g, const uint32_t* set, size_t count,
                                    const char* certificate, int* valid) {
  return guard([&] {
    require(g && certificate && valid, "null argument");
    sgeo::VertexSet s = to_set(g, set, count);
    sgeo::Assignment a = sgeo::parse_certificate(certificate);
    *valid = sgeo::check_assignment(g->g, s, a) ? 1 : 0;
  });
}

sgeo_status sgeo_solve(const sgeo_graph* g, sgeo_solver algorithm, int64_t k, uint64_t budget,
                       sgeo_result** out) {
  return guard([&] {
    require(g && out, "null argument");
    require(algorithm >= SGEO_SOLVE_AUTO && algorithm <= SGEO_SOLVE_FPT, "unknown solver");
    std::optional<std::size_t> bound;
    if (k >= 0) bound = static_cast<std::size_t>(k);
    sgeo::Solver used = sgeo::Solver::kAuto;
    sgeo::SolveResult r =
        sgeo::solve(g->g, static_cast<sgeo::Solver>(algorithm), bound, to_budget(budget), &used);
    auto* res = new sgeo_result;
    res->verdict = r.verdict;
    res->value = r.sg_value;
    res->set = r.witness;
    res->certificate = r.certificate;
    res->nodes = r.nodes_explored;
    res->algorithm = sgeo::solver_name(used);
    res->diagnostics = r.diagnostics;
    res->json = sgeo::solve_to_json(r);
    res->json["algorithm"] = res->algorithm;
    *out = res;
  });
}

sgeo_status sgeo_kernel_check(const sgeo_graph* g, size_t k, int* reject) {
  return guard([&] {
    require(g && reject, "null argument");
    *reject = sgeo::kernel_check(g->g, k) == sgeo::KernelVerdict::kReject ? 1 : 0;
  });
}

void sgeo_result_free(sgeo_result* r) { delete r; }

sgeo_verdict sgeo_result_verdict(const sgeo_result* r) {
  if (!r) return SGEO_UNKNOWN;
  switch (r->verdict) {
    case sgeo::Verdict::kYes: return SGEO_YES;
    case sgeo::Verdict::kNo: return SGEO_NO;
    default: return SGEO_UNKNOWN;
  }
}

int sgeo_result_value(const sgeo_result* r, size_t* value) {
  if (!r || !r->value) return 0;
  if (value) *value = *r->value;
  return 1;
}

size_t sgeo_result_set(const sgeo_result* r, const uint32_t** set) {
  if (!r) return 0;
  if (set) *set = r->set.data();
  return r->set.size();
}

uint64_t sgeo_result_nodes(const sgeo_result* r) { return r ? r->nodes : 0; }
const char* sgeo_result_algorithm(const sgeo_result* r) { return r ? r->algorithm.c_str() : ""; }
size_t sgeo_result_diagnostic_count(const sgeo_result* r) { return r ? r->diagnostics.size() : 0; }

const char* sgeo_result_diagnostic(const sgeo_result* r, size_t i) {
  return r && i < r->diagnostics.size() ? r->diagnostics[i].c_str() : nullptr;
}

sgeo_status sgeo_result_certificate(const sgeo_result* r, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    *out = dup_string(r->certificate ? sgeo::format_certificate(*r->certificate) : "");
  });
}

sgeo_status sgeo_result_json(const sgeo_result* r, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    *out = dup_string(r->json.dump(2) + "\n");
  });
}

sgeo_status sgeo_formula_parse_dimacs(const char* text, sgeo_formula** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new sgeo_formula{sgeo::parse_dimacs(text)};
  });
}

sgeo_status sgeo_formula_write_dimacs(const sgeo_formula* f, char** out) {
  return guard([&] {
    require(f && out, "null argument");
    *out = dup_string(sgeo::write_dimacs(f->f));
  });
}

void sgeo_formula_free(sgeo_formula* f) { delete f; }
size_t sgeo_formula_vars(const sgeo_formula* f) { return f ? f->f.n_vars : 0; }
size_t sgeo_formula_clauses(const sgeo_formula* f) { return f ? f->f.clauses.size() : 0; }
int sgeo_formula_is_normalized(const sgeo_formula* f) {
  return f && sgeo::is_normalized(f->f) ? 1 : 0;
}

sgeo_status sgeo_formula_normalize(const sgeo_formula* f, sgeo_formula** out, int* unsat) {
  return guard([&] {
    require(f && out, "null argument");
    sgeo::NormalizedFormula n = sgeo::normalize_3sat3(f->f);
    if (unsat) *unsat = n.unsat ? 1 : 0;
    *out = new sgeo_formula{std::move(n.formula)};
  });
}

sgeo_status sgeo_reduce_formula(const sgeo_formula* f, sgeo_reduction kind, sgeo_instance** out) {
  return guard([&] {
    require(f && out, "null argument");
    require(kind == SGEO_REDUCE_3SAT3 || kind == SGEO_REDUCE_3SAT3_DEG4,
            "reduction does not take a formula");
    auto* inst = new sgeo_instance;
    try {
      inst->inst = kind == SGEO_REDUCE_3SAT3 ? sgeo::sat3_to_sgr(f->f)
                                             : sgeo::sat3_to_sgr_bounded_degree(f->f);
    } catch (...) {
      delete inst;
      throw;
    }
    inst->graph.g = inst->inst.graph;
    *out = inst;
  });
}

sgeo_status sgeo_reduce_graph(const sgeo_graph* g, sgeo_reduction kind, size_t k,
                              const uint32_t* set, size_t count, sgeo_instance** out) {
  return guard([&] {
    require(g && out, "null argument");
    sgeo::LabeledInstance li;
    switch (kind) {
      case SGEO_REDUCE_DOMSET_BIPARTITE:
        li = sgeo::domset_bipartite_to_sg_cobipartite(g->g, k);
        break;
      case SGEO_REDUCE_DOMSET_SPLIT:
        li = sgeo::domset_split_to_sg_chordal(g->g, k);
        break;
      case SGEO_REDUCE_SGR:
        li = sgeo::sgr_to_sg(g->g, to_set(g, set, count));
        break;
      default:
        require(false, "reduction does not take a graph");
    }
    auto* inst = new sgeo_instance;
    inst->inst = std::move(li);
    inst->graph.g = inst->inst.graph;
    *out = inst;
  });
}

void sgeo_instance_free(sgeo_instance* inst) { delete inst; }
const sgeo_graph* sgeo_instance_graph(const sgeo_instance* inst) {
  return inst ? &inst->graph : nullptr;
}

size_t sgeo_instance_set(const sgeo_instance* inst, const uint32_t** set) {
  if (!inst) return 0;
  if (set) *set = inst->inst.set.data();
  return inst->inst.set.size();
}

size_t sgeo_instance_k(const sgeo_instance* inst) { return inst ? inst->inst.k : 0; }

sgeo_status sgeo_instance_labels(const sgeo_instance* inst, char** out) {
  return guard([&] {
    require(inst && out, "null argument");
    *out = dup_string(sgeo::write_labels(inst->inst.labels));
  });
}

sgeo_status sgeo_instance_translate_sat_witness(const sgeo_instance* inst, const sgeo_formula* f,
                                                const int* truth, size_t n, char** certificate) {
  return guard([&] {
    require(inst && f && certificate && (truth || n == 0), "null argument");
    std::vector<bool> values(truth, truth + n);
    sgeo::Assignment a = sgeo::translate_sat_witness(f->f, values, inst->inst);
    *certificate = dup_string(sgeo::format_certificate(a));
  });
}

sgeo_status sgeo_instance_extract_domset(const sgeo_instance* inst, const uint32_t* set,
                                         size_t count, uint32_t** out, size_t* out_count) {
  return guard([&] {
    require(inst && out && out_count, "null argument");
    sgeo::VertexSet s = to_set(&inst->graph, set, count);
    *out = dup_set(sgeo::extract_domset_witness(inst->inst, s), out_count);
  });
}

sgeo_status sgeo_generate_graph(const char* family, size_t n, uint64_t seed, sgeo_graph** out) {
  return guard([&] {
    require(family && out, "null argument");
    std::string fam(family);
    sgeo::Graph g;
    if (fam == "cactus") {
      g = sgeo::random_cactus(n, seed);
    } else if (fam == "block") {
      g = sgeo::random_block_graph(n, seed);
    } else if (fam == "split") {
      g = sgeo::random_split_graph(n, seed);
    } else if (fam == "bipartite") {
      g = sgeo::random_bipartite_graph(n, seed);
    } else if (fam == "connected") {
      g = sgeo::random_connected_graph(n, seed);
    } else {
      require(false, "unknown graph family");
    }
    *out = new sgeo_graph{std::move(g)};
  });
}

sgeo_status sgeo_generate_formula(size_t n_vars, uint64_t seed, sgeo_formula** out) {
  return guard([&] {
    require(out, "null argument");
    *out = new sgeo_formula{sgeo::random_3sat3(n_vars, seed)};
  });
}

sgeo_status sgeo_oracle_run(const sgeo_oracle_options* options, sgeo_oracle_report** out) {
  return guard([&] {
    require(options && out && options->family, "null argument");
    sgeo::OracleOptions o;
    o.family = sgeo::parse_oracle_family(options->family);
    o.max_n = options->max_n;
    o.seeds = options->seeds;
    o.base_seed = options->base_seed;
    o.threads = options->threads;
    if (options->archive_dir) o.archive_dir = options->archive_dir;
    *out = new sgeo_oracle_report{sgeo::run_oracle(o)};
  });
}

void sgeo_oracle_report_free(sgeo_oracle_report* r) { delete r; }
size_t sgeo_oracle_disagreements(const sgeo_oracle_report* r) {
  return r ? r->report.disagreements.size() : 0;
}

sgeo_status sgeo_oracle_report_text(const sgeo_oracle_report* r, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    *out = dup_string(sgeo::format_oracle_report(r->report));
  });
}

sgeo_status sgeo_oracle_report_json(const sgeo_oracle_report* r, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    *out = dup_string(sgeo::oracle_report_to_json(r->report).dump(2) + "\n");
  });
}

}  // extern "C"
