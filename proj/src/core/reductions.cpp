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

#include "core/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "core/error.hpp"
#include "core/geodesics.hpp"
#include "core/recognition.hpp"
#include "core/structure.hpp"

namespace sgeo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool to_number(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
}

std::string num(std::size_t i) { return std::to_string(i); }

// Satisfiable padding blocks over fresh variables. Every variable occurs with
// both signs and at most three times, so padding keeps the formula normalized.
struct PadPiece {
  std::size_t vars;
  std::vector<std::vector<int>> clauses;
  std::vector<bool> truth;
};

const std::vector<PadPiece>& pad_pieces() {
  static const std::vector<PadPiece> pieces = {
      {2, {{1, 2}, {-1, -2}}, {true, false}},
      {2, {{1, 2}, {-1, -2}, {1, -2}}, {true, false}},
      {3, {{1, 2, 3}, {-1, -2, -3}}, {true, false, false}},
      {3, {{1, 2}, {-2, 3}, {-3, -1}}, {true, false, false}},
      {3, {{1, 2}, {-1, -2}, {1, 3}, {-3, -2}}, {true, false, false}},
      {4, {{1, 2, 3}, {-1, -2, 4}, {-3, -4}}, {true, false, false, false}},
  };
  return pieces;
}

// Piece indices adding exactly dv variables and dm clauses, if possible.
std::optional<std::vector<std::size_t>> pad_plan(std::size_t dv, std::size_t dm) {
  const auto& pieces = pad_pieces();
  // via[v][c] = piece used to reach (v, c) last, or -1 if unreachable.
  std::vector<std::vector<int>> via(dv + 1, std::vector<int>(dm + 1, -2));
  via[0][0] = -1;
  for (std::size_t v = 0; v <= dv; ++v) {
    for (std::size_t c = 0; c <= dm; ++c) {
      if (via[v][c] == -2) continue;
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        std::size_t nv = v + pieces[p].vars, nc = c + pieces[p].clauses.size();
        if (nv <= dv && nc <= dm && via[nv][nc] == -2) via[nv][nc] = static_cast<int>(p);
      }
    }
  }
  if (via[dv][dm] == -2) return std::nullopt;
  std::vector<std::size_t> plan;
  for (std::size_t v = dv, c = dm; v || c;) {
    auto p = static_cast<std::size_t>(via[v][c]);
    plan.push_back(p);
    v -= pieces[p].vars;
    c -= pieces[p].clauses.size();
  }
  return plan;
}

std::size_t next_pow2(std::size_t x) {
  std::size_t p = 1;
  while (p < x) p <<= 1;
  return p;
}

std::size_t log2_exact(std::size_t x) {
  std::size_t a = 0;
  while ((std::size_t{1} << a) < x) ++a;
  return a;
}

// Appends padding pieces so that both counts become powers of two.
Sat3Formula pad_formula(const Sat3Formula& f, std::vector<bool>& padding_truth) {
  const std::size_t n0 = next_pow2(std::max<std::size_t>(f.n_vars, 2));
  const std::size_t m0 = next_pow2(std::max<std::size_t>(f.clauses.size(), 2));
  std::vector<std::pair<std::size_t, std::size_t>> targets;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) targets.emplace_back(n0 << a, m0 << b);
  }
  std::stable_sort(targets.begin(), targets.end(), [](auto x, auto y) {
    return x.first + x.second < y.first + y.second;
  });
  for (auto [n, m] : targets) {
    auto plan = pad_plan(n - f.n_vars, m - f.clauses.size());
    if (!plan) continue;
    Sat3Formula out = f;
    for (std::size_t p : *plan) {
      const PadPiece& piece = pad_pieces()[p];
      int base = static_cast<int>(out.n_vars);
      for (const auto& clause : piece.clauses) {
        std::vector<int> c;
        for (int lit : clause) c.push_back(lit > 0 ? lit + base : lit - base);
        out.clauses.push_back(std::move(c));
      }
      out.n_vars += piece.vars;
      padding_truth.insert(padding_truth.end(), piece.truth.begin(), piece.truth.end());
    }
    return out;
  }
  throw Error(ErrorCode::kInvalidFormula, "no padding reaches power-of-two sizes");
}

// Adds a path of `len` edges between u and v through fresh vertices.
void connect(GraphBuilder& b, Vertex u, Vertex v, std::size_t len, const std::string& name) {
  Vertex prev = u;
  for (std::size_t i = 1; i < len; ++i) {
    Vertex mid = b.add_vertex(name + "_" + num(i));
    b.add_edge(prev, mid);
    prev = mid;
  }
  b.add_edge(prev, v);
}

// Full binary tree over `leaves` (a power of two, at least 2) rooted at a new vertex.
Vertex binary_tree(GraphBuilder& b, std::vector<Vertex> level, const std::string& root,
                   const std::string& prefix) {
  std::size_t counter = 0;
  while (level.size() > 2) {
    std::vector<Vertex> up;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      Vertex t = b.add_vertex(prefix + num(++counter));
      b.add_edge(t, level[i]);
      b.add_edge(t, level[i + 1]);
      up.push_back(t);
    }
    level = std::move(up);
  }
  Vertex r = b.add_vertex(root);
  for (Vertex leaf : level) b.add_edge(r, leaf);
  return r;
}

LabeledInstance build_sat_instance(const Sat3Formula& encoded, std::size_t source_vars,
                                   std::vector<bool> padding_truth, bool bounded) {
  GraphBuilder b;
  SatLayout layout;
  for (std::size_t i = 1; i <= encoded.n_vars; ++i) {
    SatGadget gd{};
    gd.p = b.add_vertex("p" + num(i));
    gd.q = b.add_vertex("q" + num(i));
    gd.x = b.add_vertex("x" + num(i));
    gd.x_prime = b.add_vertex("x" + num(i) + "'");
    gd.xbar = b.add_vertex("~x" + num(i));
    gd.xbar_prime = b.add_vertex("~x" + num(i) + "'");
    gd.w = b.add_vertex("w" + num(i));
    gd.wbar = b.add_vertex("~w" + num(i));
    layout.gadgets.push_back(gd);
  }
  for (std::size_t j = 1; j <= encoded.clauses.size(); ++j) {
    layout.clauses.push_back(b.add_vertex("c" + num(j)));
  }
  const std::size_t alpha = bounded ? log2_exact(encoded.n_vars) : 1;
  for (std::size_t i = 0; i < layout.gadgets.size(); ++i) {
    const SatGadget& gd = layout.gadgets[i];
    const std::string id = num(i + 1);
    b.add_edge(gd.x, gd.w);
    b.add_edge(gd.w, gd.x_prime);
    b.add_edge(gd.xbar, gd.wbar);
    b.add_edge(gd.wbar, gd.xbar_prime);
    const std::size_t len = alpha > 1 ? alpha : 1;
    connect(b, gd.p, gd.x, len, "path_p" + id + "_x" + id);
    connect(b, gd.p, gd.xbar, len, "path_p" + id + "_~x" + id);
    connect(b, gd.q, gd.xbar_prime, len, "path_q" + id + "_~x" + id + "'");
    connect(b, gd.q, gd.x_prime, len, "path_q" + id + "_x" + id + "'");
  }
  for (std::size_t j = 0; j < encoded.clauses.size(); ++j) {
    for (int lit : encoded.clauses[j]) {
      const SatGadget& gd = layout.gadgets[static_cast<std::size_t>(std::abs(lit)) - 1];
      b.add_edge(layout.clauses[j], lit > 0 ? gd.w : gd.wbar);
    }
  }
  if (!bounded) {
    layout.z = b.add_vertex("z");
    for (Vertex c : layout.clauses) b.add_edge(layout.z, c);
    const std::size_t n = layout.gadgets.size();
    auto y_path = [&](Vertex u, Vertex v, const std::string& name) {
      Vertex y = b.add_vertex(name);
      b.add_edge(u, y);
      b.add_edge(y, v);
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& gi = layout.gadgets[i];
        const auto& gj = layout.gadgets[j];
        std::string a = num(i + 1), c = num(j + 1);
        y_path(gi.p, gj.p, "y_p" + a + "_p" + c);
        y_path(gi.q, gj.q, "y_q" + a + "_q" + c);
        y_path(gi.p, gj.q, "y_p" + a + "_q" + c);
        y_path(gi.q, gj.p, "y_q" + a + "_p" + c);
      }
    }
  } else {
    layout.z = binary_tree(b, layout.clauses, "z", "tz");
    std::vector<Vertex> ps, qs;
    for (const auto& gd : layout.gadgets) {
      ps.push_back(gd.p);
      qs.push_back(gd.q);
    }
    Vertex pbar = binary_tree(b, ps, "~p", "tp");
    Vertex qbar = binary_tree(b, qs, "~q", "tq");
    Vertex y = b.add_vertex("y");
    b.add_edge(pbar, y);
    b.add_edge(y, qbar);
  }

  LabeledInstance inst;
  inst.kind = bounded ? InstanceKind::kSatBoundedDegree : InstanceKind::kSat;
  inst.graph = b.build();
  inst.labels = b.labels();
  std::vector<Vertex> s;
  for (const auto& gd : layout.gadgets) {
    s.push_back(gd.p);
    s.push_back(gd.q);
  }
  s.push_back(layout.z);
  inst.set = make_vertex_set(std::move(s), inst.graph.order());
  inst.k = inst.set.size();
  layout.encoded = encoded;
  layout.source_vars = source_vars;
  layout.padding_truth = std::move(padding_truth);
  inst.sat = std::move(layout);
  return inst;
}

Path through(const GeodesicIndex& index, std::initializer_list<Vertex> waypoints) {
  Path out;
  auto it = waypoints.begin();
  out.push_back(*it);
  for (auto prev = it++; it != waypoints.end(); prev = it++) {
    Path seg = index.first_geodesic(*prev, *it);
    out.insert(out.end(), seg.begin() + 1, seg.end());
  }
  return out;
}

}  // namespace

Sat3Formula parse_dimacs(std::string_view text) {
  Sat3Formula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == 'c' || line.front() == '%') continue;
    auto toks = tokens(line);
    if (toks.front() == "p") {
      if (header) throw Error(ErrorCode::kParseError, "duplicate problem line", line_no);
      if (toks.size() != 4 || toks[1] != "cnf" || !to_number(toks[2], f.n_vars) ||
          !to_number(toks[3], declared)) {
        throw Error(ErrorCode::kParseError, "expected 'p cnf <vars> <clauses>'", line_no);
      }
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::kParseError, "clause before problem line", line_no);
    for (auto tok : toks) {
      int lit = 0;
      if (!to_number(tok, lit)) {
        throw Error(ErrorCode::kParseError, "bad literal '" + std::string(tok) + "'", line_no);
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::abs(lit)) > f.n_vars) {
        throw Error(ErrorCode::kParseError, "literal out of range", line_no);
      }
      current.push_back(lit);
    }
  }
  if (!header) throw Error(ErrorCode::kParseError, "missing problem line");
  if (!current.empty()) throw Error(ErrorCode::kParseError, "last clause is not terminated by 0");
  if (f.clauses.size() != declared) {
    throw Error(ErrorCode::kParseError, "clause count differs from the problem line");
  }
  validate_formula(f);
  return f;
}

std::string write_dimacs(const Sat3Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

void validate_formula(const Sat3Formula& f) {
  std::vector<std::size_t> occurrences(f.n_vars + 1, 0);
  for (const auto& c : f.clauses) {
    if (c.size() > 3) throw Error(ErrorCode::kClauseTooLarge, "clause has more than 3 literals");
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto v = static_cast<std::size_t>(std::abs(c[i]));
      if (c[i] == 0 || v > f.n_vars) {
        throw Error(ErrorCode::kInvalidFormula, "literal out of range");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (std::abs(c[j]) == std::abs(c[i])) {
          throw Error(ErrorCode::kInvalidFormula, "variable repeated within a clause");
        }
      }
      if (++occurrences[v] > 3) {
        throw Error(ErrorCode::kInvalidFormula,
                    "variable " + num(v) + " occurs more than three times");
      }
    }
  }
}

bool is_normalized(const Sat3Formula& f) {
  std::vector<int> pos(f.n_vars + 1, 0), neg(f.n_vars + 1, 0);
  for (const auto& c : f.clauses) {
    if (c.empty()) return false;
    for (int lit : c) ++(lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit))];
  }
  for (std::size_t v = 1; v <= f.n_vars; ++v) {
    if (!pos[v] || !neg[v]) return false;
  }
  return true;
}

bool satisfies(const Sat3Formula& f, const std::vector<bool>& truth) {
  if (truth.size() != f.n_vars) {
    throw Error(ErrorCode::kInvalidArgument, "truth assignment has the wrong length");
  }
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) {
      if (truth[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0)) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

NormalizedFormula normalize_3sat3(const Sat3Formula& f) {
  validate_formula(f);
  NormalizedFormula out;
  out.fixed.assign(f.n_vars, std::nullopt);
  std::vector<bool> alive(f.clauses.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> pos(f.n_vars + 1, 0), neg(f.n_vars + 1, 0);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
      if (!alive[j]) continue;
      for (int lit : f.clauses[j]) ++(lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit))];
    }
    for (std::size_t v = 1; v <= f.n_vars && !changed; ++v) {
      if ((pos[v] > 0) == (neg[v] > 0)) continue;
      const int sat_lit = pos[v] ? static_cast<int>(v) : -static_cast<int>(v);
      out.fixed[v - 1] = pos[v] > 0;
      for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& c = f.clauses[j];
        if (alive[j] && std::find(c.begin(), c.end(), sat_lit) != c.end()) alive[j] = false;
      }
      changed = true;
    }
  }
  std::vector<std::size_t> renumber(f.n_vars + 1, 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (!alive[j]) continue;
    if (f.clauses[j].empty()) out.unsat = true;
    for (int lit : f.clauses[j]) renumber[static_cast<std::size_t>(std::abs(lit))] = 1;
  }
  for (std::size_t v = 1; v <= f.n_vars; ++v) {
    if (renumber[v]) {
      out.original_var.push_back(v);
      renumber[v] = out.original_var.size();
    }
  }
  out.formula.n_vars = out.original_var.size();
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (!alive[j]) continue;
    std::vector<int> c;
    for (int lit : f.clauses[j]) {
      int v = static_cast<int>(renumber[static_cast<std::size_t>(std::abs(lit))]);
      c.push_back(lit > 0 ? v : -v);
    }
    out.formula.clauses.push_back(std::move(c));
  }
  return out;
}

std::vector<bool> lift_truth(const NormalizedFormula& n, const std::vector<bool>& truth) {
  if (truth.size() != n.formula.n_vars) {
    throw Error(ErrorCode::kInvalidArgument, "truth assignment has the wrong length");
  }
  std::vector<bool> out(n.fixed.size(), false);
  for (std::size_t v = 0; v < n.fixed.size(); ++v) {
    if (n.fixed[v]) out[v] = *n.fixed[v];
  }
  for (std::size_t i = 0; i < truth.size(); ++i) out[n.original_var[i] - 1] = truth[i];
  return out;
}

std::string write_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += num(i) + ' ' + labels[i] + '\n';
  return out;
}

std::vector<std::string> parse_labels(std::string_view text, std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto toks = tokens(line);
    std::size_t id = 0;
    if (toks.size() != 2 || !to_number(toks[0], id) || id >= n || seen[id]) {
      throw Error(ErrorCode::kParseError, "expected '<id> <label>' with a fresh id", line_no);
    }
    seen[id] = true;
    labels[id] = std::string(toks[1]);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::kParseError, "label table does not cover every vertex");
  }
  return labels;
}

LabeledInstance sat3_to_sgr(const Sat3Formula& f) {
  validate_formula(f);
  if (!is_normalized(f)) throw Error(ErrorCode::kNotNormalized, "formula is not normalized");
  return build_sat_instance(f, f.n_vars, {}, false);
}

LabeledInstance sat3_to_sgr_bounded_degree(const Sat3Formula& f) {
  validate_formula(f);
  if (!is_normalized(f)) throw Error(ErrorCode::kNotNormalized, "formula is not normalized");
  std::vector<bool> padding_truth;
  Sat3Formula padded = pad_formula(f, padding_truth);
  return build_sat_instance(padded, f.n_vars, std::move(padding_truth), true);
}

Assignment translate_sat_witness(const Sat3Formula& f, const std::vector<bool>& truth,
                                 const LabeledInstance& inst) {
  if (!inst.sat) throw Error(ErrorCode::kInvalidArgument, "instance has no SAT layout");
  const SatLayout& layout = *inst.sat;
  if (f.n_vars != layout.source_vars) {
    throw Error(ErrorCode::kInvalidArgument, "formula does not match the instance");
  }
  if (!satisfies(f, truth)) {
    throw Error(ErrorCode::kWitnessDoesNotSatisfy, "truth assignment does not satisfy the formula");
  }
  std::vector<bool> full = truth;
  full.insert(full.end(), layout.padding_truth.begin(), layout.padding_truth.end());
  if (!satisfies(layout.encoded, full)) {
    throw Error(ErrorCode::kWitnessDoesNotSatisfy, "truth assignment does not satisfy the encoding");
  }

  GeodesicIndex index(inst.graph);
  Assignment a;
  const Vertex z = layout.z;
  for (std::size_t i = 0; i < layout.gadgets.size(); ++i) {
    const SatGadget& gd = layout.gadgets[i];
    const bool value = full[i];
    const int lit = value ? static_cast<int>(i + 1) : -static_cast<int>(i + 1);
    std::vector<Vertex> hit;
    for (std::size_t j = 0; j < layout.encoded.clauses.size(); ++j) {
      const auto& c = layout.encoded.clauses[j];
      if (std::find(c.begin(), c.end(), lit) != c.end()) hit.push_back(layout.clauses[j]);
    }
    if (hit.empty()) throw Error(ErrorCode::kNotNormalized, "literal occurs in no clause");
    const Vertex c = hit.front();
    const Vertex c2 = hit.size() > 1 ? hit[1] : hit.front();
    if (value) {
      a.set(gd.p, z, through(index, {gd.p, gd.x, gd.w, c, z}));
      a.set(gd.q, z, through(index, {gd.q, gd.x_prime, gd.w, c2, z}));
      a.set(gd.p, gd.q, through(index, {gd.p, gd.xbar, gd.wbar, gd.xbar_prime, gd.q}));
    } else {
      a.set(gd.p, z, through(index, {gd.p, gd.xbar, gd.wbar, c, z}));
      a.set(gd.q, z, through(index, {gd.q, gd.xbar_prime, gd.wbar, c2, z}));
      a.set(gd.p, gd.q, through(index, {gd.p, gd.x, gd.w, gd.x_prime, gd.q}));
    }
  }
  const VertexSet& s = inst.set;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!a.find(s[i], s[j])) a.set(s[i], s[j], index.first_geodesic(s[i], s[j]));
    }
  }
  if (!check_assignment(index, s, a)) {
    throw Error(ErrorCode::kAlgorithmDiscrepancy, "translated witness is not a valid assignment");
  }
  return a;
}

std::vector<bool> extract_sat_witness(const LabeledInstance& inst, const Assignment& a) {
  if (!inst.sat) throw Error(ErrorCode::kInvalidArgument, "instance has no SAT layout");
  const SatLayout& layout = *inst.sat;
  std::vector<bool> truth;
  for (std::size_t i = 0; i < layout.source_vars; ++i) {
    const SatGadget& gd = layout.gadgets[i];
    const Path* p = a.find(gd.p, layout.z);
    if (!p) throw Error(ErrorCode::kInvalidArgument, "assignment lacks a p,z path");
    truth.push_back(std::find(p->begin(), p->end(), gd.x) != p->end());
  }
  return truth;
}

LabeledInstance domset_bipartite_to_sg_cobipartite(const Graph& g, std::size_t k) {
  require_connected(g);
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorCode::kNotBipartite, "graph is not bipartite");
  if (parts->left.size() < 2 || parts->right.size() < 2) {
    throw Error(ErrorCode::kPartTooSmall, "both parts need at least two vertices");
  }
  GraphBuilder b;
  for (Vertex v = 0; v < g.order(); ++v) b.add_vertex("v" + num(v));
  for (const Edge& e : g.edges()) b.add_edge(e.first, e.second);
  std::vector<Vertex> side_a(parts->left.begin(), parts->left.end());
  std::vector<Vertex> side_b(parts->right.begin(), parts->right.end());
  for (Vertex v : parts->left) side_a.push_back(b.add_vertex("abar_" + num(v)));
  for (Vertex v : parts->right) side_b.push_back(b.add_vertex("bbar_" + num(v)));
  Vertex a1 = b.add_vertex("a'");
  Vertex b1 = b.add_vertex("b'");
  for (const auto* side : {&side_a, &side_b}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) b.add_edge((*side)[i], (*side)[j]);
    }
  }
  for (Vertex v = 0; v < b.order(); ++v) {
    if (v != a1) b.add_edge(a1, v);
    if (v != b1) b.add_edge(b1, v);
  }
  LabeledInstance inst;
  inst.kind = InstanceKind::kCoBipartite;
  inst.graph = b.build();
  inst.labels = b.labels();
  inst.k = k + g.order();
  inst.source = g;
  for (Vertex v = 0; v < g.order(); ++v) inst.source_ids.push_back(v);
  return inst;
}

LabeledInstance domset_split_to_sg_chordal(const Graph& g, std::size_t k) {
  require_connected(g);
  auto parts = split_partition(g);
  if (!parts) throw Error(ErrorCode::kNotSplit, "graph is not a split graph");
  GraphBuilder b;
  for (Vertex v = 0; v < g.order(); ++v) b.add_vertex("v" + num(v));
  for (const Edge& e : g.edges()) b.add_edge(e.first, e.second);
  for (Vertex u : parts->independent) b.add_edge(u, b.add_vertex("x_" + num(u)));
  for (Vertex v : parts->clique) b.add_edge(v, b.add_vertex("y_" + num(v)));
  Vertex z = b.add_vertex("z");
  for (Vertex v = 0; v < z; ++v) b.add_edge(z, v);
  LabeledInstance inst;
  inst.kind = InstanceKind::kChordal;
  inst.graph = b.build();
  inst.labels = b.labels();
  inst.k = k + g.order();
  inst.source = g;
  for (Vertex v = 0; v < g.order(); ++v) inst.source_ids.push_back(v);
  inst.universal = z;
  return inst;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
  std::vector<bool> dominated(g.order(), false);
  for (Vertex v : d) {
    if (v >= g.order()) throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
    dominated[v] = true;
    for (Vertex w : g.neighbors(v)) dominated[w] = true;
  }
  return std::find(dominated.begin(), dominated.end(), false) == dominated.end();
}

VertexSet extract_domset_witness(const LabeledInstance& inst, const VertexSet& sgset,
                                 bool trusted) {
  if (inst.kind != InstanceKind::kCoBipartite && inst.kind != InstanceKind::kChordal) {
    throw Error(ErrorCode::kInvalidArgument, "instance is not a dominating-set reduction");
  }
  VertexSet s = make_vertex_set(sgset, inst.graph.order());
  if (!trusted && recognize_general(inst.graph, s).verdict != Verdict::kYes) {
    throw Error(ErrorCode::kNotAStrongGeodeticSet, "set is not strong geodetic");
  }
  if (inst.universal) {
    s.erase(std::remove(s.begin(), s.end(), *inst.universal), s.end());
  }
  std::vector<std::optional<Vertex>> back(inst.graph.order());
  for (Vertex v = 0; v < inst.source_ids.size(); ++v) back[inst.source_ids[v]] = v;
  VertexSet d;
  for (Vertex v : s) {
    if (back[v]) d.push_back(*back[v]);
  }
  std::sort(d.begin(), d.end());
  if (!is_dominating_set(inst.source, d)) {
    throw Error(ErrorCode::kAlgorithmDiscrepancy, "extracted set does not dominate the source");
  }
  return d;
}

LabeledInstance sgr_to_sg(const Graph& g, const VertexSet& s) {
  require_connected(g);
  VertexSet checked = make_vertex_set(s, g.order());
  GraphBuilder b;
  for (Vertex v = 0; v < g.order(); ++v) b.add_vertex("v" + num(v));
  for (const Edge& e : g.edges()) b.add_edge(e.first, e.second);
  LabeledInstance inst;
  for (Vertex v : checked) {
    Vertex x = b.add_vertex("x_" + num(v));
    b.add_edge(v, x);
    inst.set.push_back(x);
  }
  inst.kind = InstanceKind::kPendant;
  inst.graph = b.build();
  inst.labels = b.labels();
  inst.k = checked.size();
  inst.source = g;
  for (Vertex v = 0; v < g.order(); ++v) inst.source_ids.push_back(v);
  return inst;
}

Assignment strip_pendant_assignment(const LabeledInstance& inst, const Assignment& a) {
  Assignment out;
  for (const auto& [key, path] : a) {
    if (path.size() < 3) {
      throw Error(ErrorCode::kMalformedPath, "pendant path has no interior");
    }
    Path inner(path.begin() + 1, path.end() - 1);
    for (Vertex end : {path.front(), path.back()}) {
      if (!std::binary_search(inst.set.begin(), inst.set.end(), end)) {
        throw Error(ErrorCode::kMalformedPath, "path does not start and end at pendants");
      }
    }
    Vertex a = inner.front(), b = inner.back();
    out.set(a, b, std::move(inner));
  }
  return out;
}

}  // namespace sgeo
