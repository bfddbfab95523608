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

#include "core/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "core/error.hpp"
#include "core/matching.hpp"
#include "core/reductions.hpp"
#include "core/solvers.hpp"

namespace sgeo {

namespace {

constexpr std::size_t kMaterializeLimit = 4096;
constexpr std::size_t kDominanceLimit = 256;
constexpr std::size_t kMemoLimit = std::size_t{1} << 20;

thread_local std::size_t g_aux_pairs = 0;

void validate_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.order()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(s[i]) + " is not in the graph");
    }
    if (i && s[i - 1] >= s[i]) {
      throw Error(ErrorCode::kInvalidArgument, "vertex set must be sorted and duplicate-free");
    }
  }
}

std::vector<bool> membership(std::size_t n, const VertexSet& s) {
  std::vector<bool> in(n, false);
  for (Vertex v : s) in[v] = true;
  return in;
}

// A set of at most one vertex has no pairs, so it is strong geodetic iff it is V.
std::optional<RecognitionResult> small_set(const Graph& g, const VertexSet& s) {
  if (s.size() > 1) return std::nullopt;
  RecognitionResult r;
  r.verdict = s.size() == g.order() ? Verdict::kYes : Verdict::kNo;
  if (r.verdict == Verdict::kYes) r.certificate = Assignment{};
  return r;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

struct PairSlot {
  Vertex u = 0;
  Vertex v = 0;
  BigCount count;
  Distance dist = 0;
  std::vector<Path> paths;
  bool lazy = false;
};

struct MemoKey {
  std::size_t depth;
  std::vector<std::uint64_t> words;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(k.depth);
    for (auto w : k.words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Candidate {
  Path path;
  std::vector<Vertex> gain;
};

class GeneralSearch {
 public:
  GeneralSearch(const GeodesicIndex& index, const VertexSet& s,
                std::optional<std::uint64_t> budget)
      : index_(index), s_(s), budget_(budget) {}

  RecognitionResult run() {
    const Graph& g = index_.graph();
    const std::size_t n = g.order();
    auto in_s = membership(n, s_);
    for (std::size_t i = 0; i < s_.size(); ++i) {
      for (std::size_t j = i + 1; j < s_.size(); ++j) {
        PairSlot p;
        p.u = s_[i];
        p.v = s_[j];
        p.dist = index_.distance(p.u, p.v);
        p.count = index_.count(p.u, p.v);
        pairs_.push_back(std::move(p));
      }
    }
    std::stable_sort(pairs_.begin(), pairs_.end(), [](const PairSlot& a, const PairSlot& b) {
      if (a.count != b.count) return a.count < b.count;
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });

    cover_.assign(n, 0);
    words_.assign((n + 63) / 64, 0);
    last_pair_.assign(n, 0);
    for (Vertex v : s_) touch(v, +1);
    for (Vertex x = 0; x < n; ++x) {
      if (!in_s[x]) outside_.push_back(x);
    }
    uncovered_ = outside_.size();

    suffix_capacity_.assign(pairs_.size() + 1, 0);
    for (std::size_t i = pairs_.size(); i-- > 0;) {
      PairSlot& p = pairs_[i];
      suffix_capacity_[i] = suffix_capacity_[i + 1] + (p.dist - 1);
      for (Vertex x : index_.interval(p.u, p.v)) {
        if (last_pair_[x] == 0) last_pair_[x] = i + 1;
      }
      if (p.count <= kMaterializeLimit) {
        p.paths = index_.enumerate(p.u, p.v);
      } else {
        p.lazy = true;
      }
    }

    chosen_.assign(pairs_.size(), Path{});
    RecognitionResult r;
    Outcome out = search(0);
    r.nodes_explored = nodes_;
    if (out == Outcome::kFound) {
      r.verdict = Verdict::kYes;
      Assignment a;
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        a.set(pairs_[i].u, pairs_[i].v, chosen_[i]);
      }
      r.certificate = std::move(a);
    } else {
      r.verdict = out == Outcome::kAborted ? Verdict::kUnknown : Verdict::kNo;
    }
    return r;
  }

 private:
  enum class Outcome { kFound, kFailed, kAborted };

  void touch(Vertex x, int delta) {
    if (delta > 0) {
      if (cover_[x]++ == 0) {
        words_[x / 64] |= std::uint64_t{1} << (x % 64);
        --uncovered_;
      }
    } else if (--cover_[x] == 0) {
      words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
      ++uncovered_;
    }
  }

  void apply(const Path& p, int delta) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) touch(p[i], delta);
  }

  std::vector<Vertex> gain_of(const Path& p) const {
    std::vector<Vertex> gain;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (cover_[p[i]] == 0) gain.push_back(p[i]);
    }
    std::sort(gain.begin(), gain.end());
    return gain;
  }

  std::vector<Candidate> candidates(const PairSlot& p) const {
    std::map<std::vector<Vertex>, std::size_t> seen;
    std::vector<Candidate> out;
    auto offer = [&](const Path& path) {
      auto gain = gain_of(path);
      if (seen.count(gain)) return;
      seen.emplace(gain, out.size());
      out.push_back({path, std::move(gain)});
    };
    if (p.lazy) {
      GeodesicCursor cursor(index_, p.u, p.v);
      while (auto path = cursor.next()) offer(*path);
    } else {
      for (const Path& path : p.paths) offer(path);
    }

    if (out.size() <= kDominanceLimit) {
      std::vector<bool> dominated(out.size(), false);
      for (std::size_t a = 0; a < out.size(); ++a) {
        for (std::size_t b = 0; b < out.size() && !dominated[a]; ++b) {
          if (a == b || out[b].gain.size() <= out[a].gain.size()) continue;
          if (std::includes(out[b].gain.begin(), out[b].gain.end(), out[a].gain.begin(),
                            out[a].gain.end())) {
            dominated[a] = true;
          }
        }
      }
      std::vector<Candidate> kept;
      for (std::size_t a = 0; a < out.size(); ++a) {
        if (!dominated[a]) kept.push_back(std::move(out[a]));
      }
      out = std::move(kept);
    } else {
      // Without the dominance pass an empty gain can still be dropped when
      // anything else gains a vertex.
      auto empty = std::find_if(out.begin(), out.end(),
                                [](const Candidate& c) { return c.gain.empty(); });
      if (empty != out.end() && out.size() > 1) out.erase(empty);
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
      return a.gain.size() > b.gain.size();
    });
    return out;
  }

  Path first_path(const PairSlot& p) const {
    return p.lazy ? index_.first_geodesic(p.u, p.v) : p.paths.front();
  }

  Outcome search(std::size_t depth) {
    ++nodes_;
    if (budget_ && nodes_ > *budget_) return Outcome::kAborted;
    if (uncovered_ == 0) {
      for (std::size_t i = depth; i < pairs_.size(); ++i) chosen_[i] = first_path(pairs_[i]);
      return Outcome::kFound;
    }
    if (depth == pairs_.size() || uncovered_ > suffix_capacity_[depth]) return Outcome::kFailed;
    for (Vertex x : outside_) {
      if (cover_[x] == 0 && last_pair_[x] <= depth) return Outcome::kFailed;
    }
    MemoKey key{depth, words_};
    if (failed_.count(key)) return Outcome::kFailed;

    for (Candidate& c : candidates(pairs_[depth])) {
      apply(c.path, +1);
      Outcome out = search(depth + 1);
      if (out == Outcome::kFound) {
        chosen_[depth] = std::move(c.path);
        return out;
      }
      apply(c.path, -1);
      if (out == Outcome::kAborted) return out;
    }
    if (failed_.size() < kMemoLimit) failed_.insert(std::move(key));
    return Outcome::kFailed;
  }

  const GeodesicIndex& index_;
  const VertexSet& s_;
  std::optional<std::uint64_t> budget_;
  std::vector<PairSlot> pairs_;
  std::vector<std::uint32_t> cover_;
  std::vector<std::uint64_t> words_;
  std::vector<std::size_t> last_pair_;
  std::vector<std::size_t> suffix_capacity_;
  std::vector<Vertex> outside_;
  std::size_t uncovered_ = 0;
  std::vector<Path> chosen_;
  std::unordered_set<MemoKey, MemoHash> failed_;
  std::uint64_t nodes_ = 0;
};

RecognitionResult match_pairs(const std::vector<VertexPair>& pair_of,
                              const std::vector<BipartiteEdge>& edges,
                              const std::vector<Vertex>& outside, Matching& matching) {
  g_aux_pairs = pair_of.size();
  matching = maximum_bipartite_matching(pair_of.size(), outside.size(), edges);
  RecognitionResult r;
  r.verdict = matching.size() == outside.size() ? Verdict::kYes : Verdict::kNo;
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "YES";
    case Verdict::kNo: return "NO";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* recognizer_name(Recognizer r) {
  switch (r) {
    case Recognizer::kAuto: return "auto";
    case Recognizer::kGeneral: return "general";
    case Recognizer::kDiameter2: return "diam2";
    case Recognizer::kSplit: return "split";
    case Recognizer::kBlock: return "block";
    case Recognizer::kCactus: return "cactus";
  }
  return "auto";
}

std::size_t last_auxiliary_pair_count() { return g_aux_pairs; }

RecognitionResult recognize_general(const GeodesicIndex& index, const VertexSet& s,
                                    std::optional<std::uint64_t> budget) {
  const Graph& g = index.graph();
  validate_set(g, s);
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  if (auto r = small_set(g, s)) return *r;
  return GeneralSearch(index, s, budget).run();
}

RecognitionResult recognize_general(const Graph& g, const VertexSet& s,
                                    std::optional<std::uint64_t> budget) {
  GeodesicIndex index(g);
  return recognize_general(index, s, budget);
}

RecognitionResult recognize_diameter2(const Graph& g, const VertexSet& s) {
  g_aux_pairs = 0;
  validate_set(g, s);
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  GeodesicIndex index(g);
  if (index.diameter() > 2) {
    throw Error(ErrorCode::kDiameterTooLarge, "graph diameter exceeds 2");
  }
  if (auto r = small_set(g, s)) return *r;

  auto in_s = membership(g.order(), s);
  std::vector<Vertex> outside;
  std::vector<std::uint32_t> slot(g.order(), kUnmatched);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!in_s[x]) {
      slot[x] = static_cast<std::uint32_t>(outside.size());
      outside.push_back(x);
    }
  }
  // Adjacent pairs have a single geodesic with no interior, so only
  // distance-2 pairs get a vertex in the auxiliary graph.
  std::vector<VertexPair> pair_of;
  std::vector<BipartiteEdge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (index.distance(s[i], s[j]) != 2) continue;
      auto a = static_cast<std::uint32_t>(pair_of.size());
      pair_of.emplace_back(s[i], s[j]);
      for (Vertex y : common_neighbors(g, s[i], s[j])) {
        if (!in_s[y]) edges.emplace_back(a, slot[y]);
      }
    }
  }
  Matching m;
  RecognitionResult r = match_pairs(pair_of, edges, outside, m);
  if (r.verdict != Verdict::kYes) return r;

  Assignment a;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (index.distance(s[i], s[j]) == 1) a.set(s[i], s[j], {s[i], s[j]});
    }
  }
  for (std::uint32_t p = 0; p < pair_of.size(); ++p) {
    auto [u, v] = pair_of[p];
    Vertex mid = m.left_mate[p] != kUnmatched ? outside[m.left_mate[p]]
                                              : common_neighbors(g, u, v).front();
    a.set(u, v, {u, mid, v});
  }
  r.certificate = std::move(a);
  return r;
}

RecognitionResult recognize_split(const Graph& g, const VertexSet& s) {
  auto partition = split_partition(g);
  if (!partition) throw Error(ErrorCode::kNotSplit, "graph is not a split graph");
  return recognize_split(g, s, *partition);
}

RecognitionResult recognize_split(const Graph& g, const VertexSet& s,
                                  const SplitPartition& partition) {
  g_aux_pairs = 0;
  validate_set(g, s);
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  auto in_clique = membership(g.order(), partition.clique);
  for (std::size_t i = 0; i < partition.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < partition.clique.size(); ++j) {
      if (!g.has_edge(partition.clique[i], partition.clique[j])) {
        throw Error(ErrorCode::kNotSplit, "partition clique side is not a clique");
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (!in_clique[e.first] && !in_clique[e.second]) {
      throw Error(ErrorCode::kNotSplit, "partition independent side has an edge");
    }
  }
  if (auto r = small_set(g, s)) return *r;

  GeodesicIndex index(g);
  auto in_s = membership(g.order(), s);
  std::vector<Vertex> outside;
  std::vector<std::uint32_t> slot(g.order(), kUnmatched);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!in_s[x]) {
      slot[x] = static_cast<std::uint32_t>(outside.size());
      outside.push_back(x);
    }
  }
  auto outside_neighbors = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x)) {
      if (!in_s[y]) out.push_back(y);
    }
    return out;
  };

  struct Far {
    Vertex u, v;
    std::uint32_t near_u, near_v;  // auxiliary vertex ids
  };
  std::vector<VertexPair> pair_of;
  std::vector<BipartiteEdge> edges;
  std::vector<std::pair<VertexPair, std::uint32_t>> near;
  std::vector<Far> far;
  std::vector<VertexPair> adjacent;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Vertex u = s[i], v = s[j];
      Distance d = index.distance(u, v);
      auto a = static_cast<std::uint32_t>(pair_of.size());
      if (d <= 2) {
        pair_of.emplace_back(u, v);
        if (d == 1) {
          adjacent.emplace_back(u, v);
          continue;
        }
        near.emplace_back(VertexPair{u, v}, a);
        for (Vertex y : common_neighbors(g, u, v)) {
          if (!in_s[y]) edges.emplace_back(a, slot[y]);
        }
      } else if (d == 3) {
        pair_of.emplace_back(u, v);
        pair_of.emplace_back(v, u);
        far.push_back({u, v, a, a + 1});
        for (Vertex y : outside_neighbors(u)) edges.emplace_back(a, slot[y]);
        for (Vertex y : outside_neighbors(v)) edges.emplace_back(a + 1, slot[y]);
      } else {
        throw Error(ErrorCode::kNotSplit, "split graph has a pair at distance above 3");
      }
    }
  }
  Matching m;
  RecognitionResult r = match_pairs(pair_of, edges, outside, m);
  if (r.verdict != Verdict::kYes) return r;

  Assignment a;
  for (auto [u, v] : adjacent) a.set(u, v, {u, v});
  for (auto& [uv, id] : near) {
    auto [u, v] = uv;
    Vertex mid = m.left_mate[id] != kUnmatched ? outside[m.left_mate[id]]
                                               : common_neighbors(g, u, v).front();
    a.set(u, v, {u, mid, v});
  }
  bool consistent = true;
  for (const Far& f : far) {
    std::optional<Vertex> k, l;
    if (m.left_mate[f.near_u] != kUnmatched) k = outside[m.left_mate[f.near_u]];
    if (m.left_mate[f.near_v] != kUnmatched) l = outside[m.left_mate[f.near_v]];
    auto pick = [&](Vertex from, Vertex partner) -> std::optional<Vertex> {
      for (Vertex y : g.neighbors(from)) {
        if (g.has_edge(y, partner)) return y;
      }
      return std::nullopt;
    };
    if (!k && !l) {
      Path p = index.first_geodesic(f.u, f.v);
      a.set(f.u, f.v, p);
      continue;
    }
    if (!k) k = pick(f.u, *l);
    if (!l) l = pick(f.v, *k);
    if (!k || !l || !g.has_edge(*k, *l)) {
      consistent = false;
      break;
    }
    a.set(f.u, f.v, {f.u, *k, *l, f.v});
  }
  if (!consistent) {
    // Both endpoints of a distance-3 pair lie on the independent side, so the
    // matched neighbors are clique vertices and always adjacent. Reaching this
    // branch means the partition was not a split partition of g.
    RecognitionResult exact = recognize_general(index, s);
    exact.diagnostics.push_back("split recognizer: matched interior vertices not adjacent; "
                                "fell back to exact search");
    return exact;
  }
  r.certificate = std::move(a);
  return r;
}

RecognitionResult recognize_block(const Graph& g, const VertexSet& s) {
  validate_set(g, s);
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  if (!is_block_graph(g)) throw Error(ErrorCode::kNotBlockGraph, "graph is not a block graph");
  if (auto r = small_set(g, s)) return *r;
  RecognitionResult r;
  VertexSet simp = simplicial_vertices(g);
  if (!std::includes(s.begin(), s.end(), simp.begin(), simp.end())) return r;
  r.verdict = Verdict::kYes;
  GeodesicIndex index(g);
  Assignment a;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      a.set(s[i], s[j], index.first_geodesic(s[i], s[j]));
    }
  }
  r.certificate = std::move(a);
  return r;
}

RecognitionResult recognize_cactus(const Graph& g, const VertexSet& s) {
  validate_set(g, s);
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  if (!is_cactus(g)) throw Error(ErrorCode::kNotCactus, "graph is not a cactus");
  if (auto r = small_set(g, s)) return *r;

  LabeledInstance inst = sgr_to_sg(g, s);
  SolveResult solved = solve_cactus(inst.graph);
  RecognitionResult r;
  r.nodes_explored = solved.nodes_explored;
  r.diagnostics = solved.diagnostics;
  if (!solved.sg_value || *solved.sg_value < s.size()) {
    throw Error(ErrorCode::kAlgorithmDiscrepancy,
                "cactus solver returned fewer vertices than the forced pendants");
  }
  if (*solved.sg_value > s.size()) return r;
  if (solved.witness != inst.set) {
    throw Error(ErrorCode::kAlgorithmDiscrepancy,
                "cactus solver optimum is not the pendant set");
  }
  if (!solved.certificate) {
    throw Error(ErrorCode::kAlgorithmDiscrepancy,
                "cactus solver found no assignment for its own set");
  }
  r.verdict = Verdict::kYes;
  r.certificate = strip_pendant_assignment(inst, *solved.certificate);
  return r;
}

RecognitionResult recognize(const Graph& g, const VertexSet& s, Recognizer algorithm,
                            std::optional<std::uint64_t> budget, Recognizer* used) {
  Recognizer pick = algorithm;
  if (pick == Recognizer::kAuto) {
    if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
    GraphClass c = classify(g);
    if (c.block) {
      pick = Recognizer::kBlock;
    } else if (c.diameter <= 2) {
      pick = Recognizer::kDiameter2;
    } else if (c.split) {
      pick = Recognizer::kSplit;
    } else if (c.cactus) {
      pick = Recognizer::kCactus;
    } else {
      pick = Recognizer::kGeneral;
    }
  }
  if (used) *used = pick;
  switch (pick) {
    case Recognizer::kDiameter2: return recognize_diameter2(g, s);
    case Recognizer::kSplit: return recognize_split(g, s);
    case Recognizer::kBlock: return recognize_block(g, s);
    case Recognizer::kCactus: return recognize_cactus(g, s);
    default: return recognize_general(g, s, budget);
  }
}

nlohmann::json recognition_to_json(const RecognitionResult& r, const VertexSet& s) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["set"] = s;
  j["nodes_explored"] = r.nodes_explored;
  j["entries"] = r.certificate ? assignment_to_json(*r.certificate) : nlohmann::json::array();
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace sgeo
