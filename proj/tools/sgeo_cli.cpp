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

// sgeo command-line front end. Exit codes: 0 YES/success, 1 NO, 2 UNKNOWN,
// 64 usage, 65 bad input data, 66 unreadable input, 70 internal, 74 write failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgeo/sgeo.h"

namespace {

enum Exit : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUnknown = 2,
  kExitUsage = 64,
  kExitData = 65,
  kExitNoInput = 66,
  kExitInternal = 70,
  kExitIo = 74,
};

struct Failure {
  int code;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<sgeo_graph, Deleter<sgeo_graph, sgeo_graph_free>>;
using ResultPtr = std::unique_ptr<sgeo_result, Deleter<sgeo_result, sgeo_result_free>>;
using FormulaPtr = std::unique_ptr<sgeo_formula, Deleter<sgeo_formula, sgeo_formula_free>>;
using InstancePtr = std::unique_ptr<sgeo_instance, Deleter<sgeo_instance, sgeo_instance_free>>;
using ReportPtr =
    std::unique_ptr<sgeo_oracle_report, Deleter<sgeo_oracle_report, sgeo_oracle_report_free>>;

void check(sgeo_status st) {
  if (st == SGEO_OK) return;
  std::cerr << "sgeo: error: " << sgeo_status_name(st) << ": " << sgeo_last_error();
  if (sgeo_last_error_line()) std::cerr << " (line " << sgeo_last_error_line() << ")";
  std::cerr << '\n';
  switch (st) {
    case SGEO_ERR_ALGORITHM_DISCREPANCY:
    case SGEO_ERR_INTERNAL: throw Failure{kExitInternal};
    case SGEO_ERR_IO: throw Failure{kExitIo};
    default: throw Failure{kExitData};
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sgeo_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "sgeo: error: cannot open " << path << '\n';
    throw Failure{kExitNoInput};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "sgeo: error: cannot write " << path << '\n';
    throw Failure{kExitIo};
  }
}

GraphPtr load_graph(const std::string& path) {
  std::string text = read_file(path);
  sgeo_graph* g = nullptr;
  check(sgeo_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

std::vector<uint32_t> load_set(const sgeo_graph* g, const std::string& path) {
  std::string text = read_file(path);
  uint32_t* raw = nullptr;
  std::size_t count = 0;
  check(sgeo_set_parse(g, text.c_str(), &raw, &count));
  std::vector<uint32_t> out(raw, raw + count);
  sgeo_set_free(raw);
  return out;
}

std::string set_line(const uint32_t* s, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

int verdict_exit(sgeo_verdict v) {
  return v == SGEO_YES ? kExitYes : v == SGEO_NO ? kExitNo : kExitUnknown;
}

const char* verdict_text(sgeo_verdict v) {
  return v == SGEO_YES ? "YES" : v == SGEO_NO ? "NO" : "UNKNOWN";
}

struct Options {
  std::string graph, set, algorithm = "auto", out, cert, from, in, labels, set_in, set_out;
  std::string family, archive;
  bool json = false, verify_only = false;
  std::optional<long long> k;
  std::uint64_t budget = 0, seed = 1;
  std::size_t n = 0, max_n = 6, seeds = 0, threads = 1;
};

int run_classify(const Options& o) {
  GraphPtr g = load_graph(o.graph);
  sgeo_class_info c{};
  check(sgeo_classify(g.get(), &c));
  auto yn = [](int b) { return b ? "yes" : "no"; };
  bool finite = c.diameter != SGEO_DIAMETER_INFINITE;
  if (o.json) {
    std::cout << "{\n  \"order\": " << sgeo_graph_order(g.get())
              << ",\n  \"size\": " << sgeo_graph_size(g.get())
              << ",\n  \"connected\": " << (c.connected ? "true" : "false")
              << ",\n  \"bipartite\": " << (c.bipartite ? "true" : "false")
              << ",\n  \"co_bipartite\": " << (c.co_bipartite ? "true" : "false")
              << ",\n  \"chordal\": " << (c.chordal ? "true" : "false")
              << ",\n  \"split\": " << (c.split ? "true" : "false")
              << ",\n  \"block\": " << (c.block ? "true" : "false")
              << ",\n  \"cactus\": " << (c.cactus ? "true" : "false") << ",\n  \"diameter\": "
              << (finite ? std::to_string(c.diameter) : std::string("null")) << "\n}\n";
    return 0;
  }
  std::cout << "order " << sgeo_graph_order(g.get()) << "\nsize " << sgeo_graph_size(g.get())
            << "\nconnected " << yn(c.connected) << "\nbipartite " << yn(c.bipartite)
            << "\nco-bipartite " << yn(c.co_bipartite) << "\nchordal " << yn(c.chordal)
            << "\nsplit " << yn(c.split) << "\nblock " << yn(c.block) << "\ncactus "
            << yn(c.cactus) << "\ndiameter "
            << (finite ? std::to_string(c.diameter) : std::string("inf")) << '\n';
  return 0;
}

sgeo_recognizer recognizer_of(const std::string& name) {
  if (name == "general") return SGEO_RECOGNIZE_GENERAL;
  if (name == "diam2") return SGEO_RECOGNIZE_DIAMETER2;
  if (name == "split") return SGEO_RECOGNIZE_SPLIT;
  if (name == "block") return SGEO_RECOGNIZE_BLOCK;
  if (name == "cactus") return SGEO_RECOGNIZE_CACTUS;
  return SGEO_RECOGNIZE_AUTO;
}

sgeo_solver solver_of(const std::string& name) {
  if (name == "exact") return SGEO_SOLVE_EXACT;
  if (name == "block") return SGEO_SOLVE_BLOCK;
  if (name == "cactus") return SGEO_SOLVE_CACTUS;
  if (name == "fpt") return SGEO_SOLVE_FPT;
  return SGEO_SOLVE_AUTO;
}

void emit_result(const Options& o, const sgeo_result* r, bool show_value) {
  std::string cert = take([&] {
    char* s = nullptr;
    check(sgeo_result_certificate(r, &s));
    return s;
  }());
  if (!o.out.empty() && sgeo_result_verdict(r) == SGEO_YES) write_file(o.out, cert);
  if (o.json) {
    char* s = nullptr;
    check(sgeo_result_json(r, &s));
    std::cout << take(s);
    return;
  }
  std::cout << verdict_text(sgeo_result_verdict(r)) << '\n';
  std::cout << "algorithm " << sgeo_result_algorithm(r) << '\n';
  if (show_value) {
    std::size_t value = 0;
    if (sgeo_result_value(r, &value)) std::cout << "sg=" << value << '\n';
    const uint32_t* set = nullptr;
    std::size_t n = sgeo_result_set(r, &set);
    if (sgeo_result_verdict(r) == SGEO_YES) std::cout << "set " << set_line(set, n) << '\n';
  }
  std::cout << "nodes " << sgeo_result_nodes(r) << '\n';
  for (std::size_t i = 0; i < sgeo_result_diagnostic_count(r); ++i) {
    std::cerr << "sgeo: diagnostic: " << sgeo_result_diagnostic(r, i) << '\n';
  }
  if (o.out.empty()) std::cout << cert;
}

int run_recognize(const Options& o) {
  GraphPtr g = load_graph(o.graph);
  std::vector<uint32_t> s = load_set(g.get(), o.set);
  if (o.verify_only) {
    if (o.cert.empty()) {
      std::cerr << "sgeo: error: --verify-only needs --cert\n";
      return kExitUsage;
    }
    std::string text = read_file(o.cert);
    int valid = 0;
    check(sgeo_verify_certificate(g.get(), s.data(), s.size(), text.c_str(), &valid));
    std::cout << (valid ? "VALID" : "INVALID") << '\n';
    return valid ? kExitYes : kExitNo;
  }
  sgeo_result* raw = nullptr;
  check(sgeo_recognize(g.get(), s.data(), s.size(), recognizer_of(o.algorithm), o.budget, &raw));
  ResultPtr r(raw);
  emit_result(o, r.get(), false);
  return verdict_exit(sgeo_result_verdict(r.get()));
}

int run_solve(const Options& o) {
  GraphPtr g = load_graph(o.graph);
  sgeo_result* raw = nullptr;
  check(sgeo_solve(g.get(), solver_of(o.algorithm), o.k ? *o.k : -1, o.budget, &raw));
  ResultPtr r(raw);
  emit_result(o, r.get(), true);
  return verdict_exit(sgeo_result_verdict(r.get()));
}

void write_instance(const Options& o, const sgeo_instance* inst) {
  char* text = nullptr;
  check(sgeo_graph_write(sgeo_instance_graph(inst), &text));
  write_file(o.out, take(text));
  if (!o.labels.empty()) {
    char* labels = nullptr;
    check(sgeo_instance_labels(inst, &labels));
    write_file(o.labels, take(labels));
  }
  const uint32_t* set = nullptr;
  std::size_t n = sgeo_instance_set(inst, &set);
  if (!o.set_out.empty()) write_file(o.set_out, set_line(set, n) + '\n');
  std::cout << "order " << sgeo_graph_order(sgeo_instance_graph(inst)) << "\nsize "
            << sgeo_graph_size(sgeo_instance_graph(inst)) << "\nk " << sgeo_instance_k(inst) << '\n';
  if (n > 0) std::cout << "set " << set_line(set, n) << '\n';
}

int run_reduce(const Options& o) {
  sgeo_instance* raw = nullptr;
  if (o.from == "3sat3" || o.from == "3sat3-deg4") {
    std::string text = read_file(o.in);
    sgeo_formula* f = nullptr;
    check(sgeo_formula_parse_dimacs(text.c_str(), &f));
    FormulaPtr formula(f);
    if (!sgeo_formula_is_normalized(formula.get())) {
      sgeo_formula* nf = nullptr;
      int unsat = 0;
      check(sgeo_formula_normalize(formula.get(), &nf, &unsat));
      formula.reset(nf);
      if (unsat) {
        std::cerr << "sgeo: error: formula contains an empty clause\n";
        return kExitData;
      }
      std::cerr << "sgeo: note: formula normalized to " << sgeo_formula_vars(nf)
                << " variables and " << sgeo_formula_clauses(nf) << " clauses\n";
    }
    check(sgeo_reduce_formula(formula.get(),
                              o.from == "3sat3" ? SGEO_REDUCE_3SAT3 : SGEO_REDUCE_3SAT3_DEG4,
                              &raw));
  } else {
    GraphPtr g = load_graph(o.in);
    if (o.from == "sgr") {
      if (o.set_in.empty()) {
        std::cerr << "sgeo: error: --from sgr needs --set-in\n";
        return kExitUsage;
      }
      std::vector<uint32_t> s = load_set(g.get(), o.set_in);
      check(sgeo_reduce_graph(g.get(), SGEO_REDUCE_SGR, 0, s.data(), s.size(), &raw));
    } else {
      if (!o.k || *o.k < 0) {
        std::cerr << "sgeo: error: --from " << o.from << " needs a non-negative --k\n";
        return kExitUsage;
      }
      auto kind = o.from == "domset-bip" ? SGEO_REDUCE_DOMSET_BIPARTITE : SGEO_REDUCE_DOMSET_SPLIT;
      check(sgeo_reduce_graph(g.get(), kind, static_cast<std::size_t>(*o.k), nullptr, 0, &raw));
    }
  }
  InstancePtr inst(raw);
  write_instance(o, inst.get());
  return 0;
}

int run_generate(const Options& o) {
  std::string text;
  if (o.family == "3sat3") {
    sgeo_formula* f = nullptr;
    check(sgeo_generate_formula(o.n, o.seed, &f));
    FormulaPtr formula(f);
    char* s = nullptr;
    check(sgeo_formula_write_dimacs(formula.get(), &s));
    text = take(s);
  } else {
    sgeo_graph* g = nullptr;
    check(sgeo_generate_graph(o.family.c_str(), o.n, o.seed, &g));
    GraphPtr graph(g);
    char* s = nullptr;
    check(sgeo_graph_write(graph.get(), &s));
    text = take(s);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
  return 0;
}

int run_oracle(const Options& o) {
  sgeo_oracle_options opts{};
  opts.family = o.family.c_str();
  opts.max_n = o.max_n;
  opts.seeds = o.seeds;
  opts.base_seed = o.seed;
  opts.threads = o.threads;
  opts.archive_dir = o.archive.empty() ? nullptr : o.archive.c_str();
  sgeo_oracle_report* raw = nullptr;
  check(sgeo_oracle_run(&opts, &raw));
  ReportPtr report(raw);
  char* s = nullptr;
  check(o.json ? sgeo_oracle_report_json(report.get(), &s)
               : sgeo_oracle_report_text(report.get(), &s));
  std::cout << take(s);
  return sgeo_oracle_disagreements(report.get()) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong geodetic sets: recognition, solving, reductions and cross-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sgeo_version());
  Options o;

  auto* classify = app.add_subcommand("classify", "Report graph classes and diameter");
  classify->add_option("graph", o.graph, "Graph file")->required();
  classify->add_flag("--json", o.json, "Machine-readable output");

  const std::vector<std::string> recognizers{"auto", "general", "diam2", "split", "block", "cactus"};
  auto* recognize = app.add_subcommand("recognize", "Decide whether a set is strong geodetic");
  recognize->add_option("graph", o.graph, "Graph file")->required();
  recognize->add_option("set", o.set, "Vertex set file")->required();
  recognize->add_option("--algorithm", o.algorithm, "Recognizer")
      ->check(CLI::IsMember(recognizers));
  recognize->add_option("--budget", o.budget, "Node budget for the general search (0 = none)");
  recognize->add_option("--out", o.out, "Write the certificate here");
  recognize->add_flag("--verify-only", o.verify_only, "Only verify the certificate given by --cert");
  recognize->add_option("--cert", o.cert, "Certificate file to verify");
  recognize->add_flag("--json", o.json, "Machine-readable output");

  const std::vector<std::string> solvers{"auto", "exact", "block", "cactus", "fpt"};
  auto* solve = app.add_subcommand("solve", "Compute a minimum strong geodetic set");
  solve->add_option("graph", o.graph, "Graph file")->required();
  solve->add_option("--algorithm", o.algorithm, "Solver")->check(CLI::IsMember(solvers));
  solve->add_option("--k", o.k, "Decide sg <= k instead of optimising");
  solve->add_option("--budget", o.budget, "Node budget for exact search (0 = none)");
  solve->add_option("--out", o.out, "Write the certificate here");
  solve->add_flag("--json", o.json, "Machine-readable output");

  const std::vector<std::string> sources{"3sat3", "3sat3-deg4", "domset-bip", "domset-split", "sgr"};
  auto* reduce = app.add_subcommand("reduce", "Build an instance from a reduction");
  reduce->add_option("--from", o.from, "Source problem")->required()->check(CLI::IsMember(sources));
  reduce->add_option("--in", o.in, "Input formula (DIMACS) or graph")->required();
  reduce->add_option("--k", o.k, "Dominating-set bound");
  reduce->add_option("--set-in", o.set_in, "Input vertex set for --from sgr");
  reduce->add_option("--out", o.out, "Output graph file")->required();
  reduce->add_option("--labels", o.labels, "Output label table");
  reduce->add_option("--set-out", o.set_out, "Output vertex set");

  const std::vector<std::string> families{"cactus", "block", "split", "bipartite", "connected", "3sat3"};
  auto* generate = app.add_subcommand("generate", "Draw a random instance");
  generate->add_option("family", o.family, "Instance family")->required()->check(CLI::IsMember(families));
  generate->add_option("--n", o.n, "Vertices, or variables for 3sat3")->required();
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--out", o.out, "Output file (default stdout)");

  const std::vector<std::string> oracle_families{"all-graphs", "cactus", "block", "split", "diam2"};
  auto* oracle = app.add_subcommand("oracle", "Cross-check specialised algorithms against exact search");
  oracle->add_option("--family", o.family, "Graph family")->required()->check(CLI::IsMember(oracle_families));
  oracle->add_option("--max-n", o.max_n, "Largest order");
  oracle->add_option("--seeds", o.seeds, "Random instances on top of the exhaustive ones");
  oracle->add_option("--seed", o.seed, "Base seed");
  oracle->add_option("--threads", o.threads, "Worker threads");
  oracle->add_option("--archive", o.archive, "Directory for counterexample files");
  oracle->add_flag("--json", o.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return run_classify(o);
    if (*recognize) return run_recognize(o);
    if (*solve) return run_solve(o);
    if (*reduce) return run_reduce(o);
    if (*generate) return run_generate(o);
    if (*oracle) return run_oracle(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
