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

#include "core/oracle.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/recognition.hpp"
#include "core/solvers.hpp"
#include "core/structure.hpp"

namespace sgeo {

namespace {

constexpr std::size_t kSubsetLimit = 8;

struct Outcome {
  std::size_t comparisons = 0;
  std::size_t certificates = 0;
  std::vector<Disagreement> disagreements;
};

using Recognize = std::function<RecognitionResult(const Graph&, const VertexSet&)>;
using Solve = std::function<SolveResult(const Graph&)>;

void note(Outcome& out, std::string check, const Graph& g, VertexSet s, std::string detail) {
  out.disagreements.push_back({std::move(check), g, std::move(s), std::move(detail), {}});
}

void certify(Outcome& out, const std::string& who, const GeodesicIndex& index,
             const VertexSet& s, const std::optional<Assignment>& cert) {
  ++out.certificates;
  if (!cert || !check_assignment(index, s, *cert)) {
    note(out, who + "-certificate", index.graph(), s, "YES certificate fails verification");
  }
}

void compare_recognizer(Outcome& out, const std::string& who, const Graph& g,
                        const Recognize& fast) {
  if (g.order() > kSubsetLimit) return;
  GeodesicIndex index(g);
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    RecognitionResult exact = recognize_general(index, s);
    ++out.comparisons;
    if (exact.verdict == Verdict::kYes) certify(out, "general", index, s, exact.certificate);
    try {
      RecognitionResult r = fast(g, s);
      if (r.verdict != exact.verdict) {
        note(out, who, g, s,
             std::string("verdict ") + verdict_name(r.verdict) + ", exact " +
                 verdict_name(exact.verdict));
      } else if (r.verdict == Verdict::kYes) {
        certify(out, who, index, s, r.certificate);
      }
    } catch (const Error& e) {
      note(out, who, g, s, std::string("error: ") + e.what());
    }
  }
}

void compare_solver(Outcome& out, const std::string& who, const Graph& g, const Solve& fast) {
  SolveResult exact = solve_exact(g);
  ++out.comparisons;
  GeodesicIndex index(g);
  try {
    SolveResult r = fast(g);
    if (r.sg_value != exact.sg_value) {
      note(out, who, g, r.witness,
           "sg " + (r.sg_value ? std::to_string(*r.sg_value) : std::string("?")) + ", exact " +
               std::to_string(*exact.sg_value));
    }
    certify(out, who, index, r.witness, r.certificate);
  } catch (const Error& e) {
    note(out, who, g, {}, std::string("error: ") + e.what());
  }
}

std::vector<Graph> instances(const OracleOptions& o) {
  std::vector<Graph> out;
  const std::size_t exhaustive_n = std::min<std::size_t>(o.max_n, 8);
  auto add_connected = [&](auto keep) {
    for (std::size_t n = 1; n <= exhaustive_n; ++n) {
      for (Graph& g : connected_graphs(n)) {
        if (keep(g)) out.push_back(std::move(g));
      }
    }
  };
  Rng pick(o.base_seed);
  auto random_order = [&] { return static_cast<std::size_t>(pick.range(1, std::max<std::size_t>(o.max_n, 1))); };
  switch (o.family) {
    case OracleFamily::kAllGraphs:
      add_connected([](const Graph&) { return true; });
      for (std::size_t i = 0; i < o.seeds; ++i) {
        out.push_back(random_connected_graph(random_order(), o.base_seed + i));
      }
      break;
    case OracleFamily::kCactus:
      for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_n, 9); ++n) {
        for (Graph& g : all_cacti(n)) out.push_back(std::move(g));
      }
      for (std::size_t i = 0; i < o.seeds; ++i) {
        out.push_back(random_cactus(random_order(), o.base_seed + i));
      }
      break;
    case OracleFamily::kBlock:
      for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_n, 9); ++n) {
        for (Graph& g : all_block_graphs(n)) out.push_back(std::move(g));
      }
      for (std::size_t i = 0; i < o.seeds; ++i) {
        out.push_back(random_block_graph(random_order(), o.base_seed + i));
      }
      break;
    case OracleFamily::kSplit:
      add_connected([](const Graph& g) { return split_partition(g).has_value(); });
      for (std::size_t i = 0; i < o.seeds; ++i) {
        out.push_back(random_split_graph(random_order(), o.base_seed + i));
      }
      break;
    case OracleFamily::kDiameter2:
      add_connected([](const Graph& g) { return GeodesicIndex(g).diameter() <= 2; });
      for (std::size_t i = 0; i < o.seeds; ++i) {
        Graph g = random_connected_graph(random_order(), o.base_seed + i, 1, 2);
        if (GeodesicIndex(g).diameter() <= 2) out.push_back(std::move(g));
      }
      break;
  }
  return out;
}

Outcome check(OracleFamily family, const Graph& g) {
  Outcome out;
  switch (family) {
    case OracleFamily::kAllGraphs: {
      GraphClass c = classify(g);
      if (c.diameter <= 2) {
        compare_recognizer(out, "diam2", g, [](auto& h, auto& s) { return recognize_diameter2(h, s); });
      }
      if (c.split) {
        compare_recognizer(out, "split", g, [](auto& h, auto& s) { return recognize_split(h, s); });
      }
      if (c.block) {
        compare_recognizer(out, "block", g, [](auto& h, auto& s) { return recognize_block(h, s); });
      }
      if (c.cactus) {
        compare_recognizer(out, "cactus", g, [](auto& h, auto& s) { return recognize_cactus(h, s); });
      }
      break;
    }
    case OracleFamily::kCactus:
      compare_solver(out, "solve-cactus", g, [](auto& h) { return solve_cactus(h); });
      compare_recognizer(out, "cactus", g, [](auto& h, auto& s) { return recognize_cactus(h, s); });
      break;
    case OracleFamily::kBlock:
      compare_solver(out, "solve-block", g, [](auto& h) { return solve_block(h); });
      compare_recognizer(out, "block", g, [](auto& h, auto& s) { return recognize_block(h, s); });
      break;
    case OracleFamily::kSplit:
      compare_recognizer(out, "split", g, [](auto& h, auto& s) { return recognize_split(h, s); });
      break;
    case OracleFamily::kDiameter2:
      compare_recognizer(out, "diam2", g, [](auto& h, auto& s) { return recognize_diameter2(h, s); });
      break;
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  f << text;
}

}  // namespace

const char* oracle_family_name(OracleFamily f) {
  switch (f) {
    case OracleFamily::kAllGraphs: return "all-graphs";
    case OracleFamily::kCactus: return "cactus";
    case OracleFamily::kBlock: return "block";
    case OracleFamily::kSplit: return "split";
    case OracleFamily::kDiameter2: return "diam2";
  }
  return "all-graphs";
}

OracleFamily parse_oracle_family(std::string_view name) {
  for (auto f : {OracleFamily::kAllGraphs, OracleFamily::kCactus, OracleFamily::kBlock,
                 OracleFamily::kSplit, OracleFamily::kDiameter2}) {
    if (name == oracle_family_name(f)) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown oracle family '" + std::string(name) + "'");
}

OracleReport run_oracle(const OracleOptions& options) {
  std::vector<Graph> graphs = instances(options);
  std::vector<Outcome> outcomes(graphs.size());
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < graphs.size(); i += threads) {
        outcomes[i] = check(options.family, graphs[i]);
      }
    });
  }
  for (auto& th : pool) th.join();

  OracleReport report;
  report.family = options.family;
  report.instances = graphs.size();
  for (Outcome& o : outcomes) {
    report.comparisons += o.comparisons;
    report.certificates_checked += o.certificates;
    for (Disagreement& d : o.disagreements) report.disagreements.push_back(std::move(d));
  }
  if (options.archive_dir && !report.disagreements.empty()) {
    std::filesystem::path dir(*options.archive_dir);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < report.disagreements.size(); ++i) {
      Disagreement& d = report.disagreements[i];
      std::string stem = std::string(oracle_family_name(options.family)) + "-" + std::to_string(i);
      write_file(dir / (stem + ".graph"), write_graph(d.graph));
      write_file(dir / (stem + ".set"), write_vertex_set(d.set));
      d.archived = {(dir / (stem + ".graph")).string(), (dir / (stem + ".set")).string()};
    }
  }
  return report;
}

nlohmann::json oracle_report_to_json(const OracleReport& r) {
  nlohmann::json j;
  j["family"] = oracle_family_name(r.family);
  j["instances"] = r.instances;
  j["comparisons"] = r.comparisons;
  j["certificates_checked"] = r.certificates_checked;
  auto list = nlohmann::json::array();
  for (const Disagreement& d : r.disagreements) {
    list.push_back({{"check", d.check},
                    {"graph", write_graph(d.graph)},
                    {"set", d.set},
                    {"detail", d.detail},
                    {"archived", d.archived}});
  }
  j["disagreements"] = list;
  return j;
}

std::string format_oracle_report(const OracleReport& r) {
  std::ostringstream out;
  out << "family " << oracle_family_name(r.family) << ": " << r.instances << " instances, "
      << r.comparisons << " comparisons, " << r.certificates_checked
      << " certificates checked, " << r.disagreements.size() << " disagreements\n";
  for (const Disagreement& d : r.disagreements) {
    std::string set = write_vertex_set(d.set);
    set.pop_back();
    out << "  " << d.check << " n=" << d.graph.order() << " S={" << set << "}: " << d.detail;
    for (const auto& f : d.archived) out << " [" << f << "]";
    out << '\n';
  }
  return out.str();
}

}  // namespace sgeo
