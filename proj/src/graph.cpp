#include "graphsdp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphsdp/errors.hpp"
#include "graphsdp/rng.hpp"

namespace graphsdp {

namespace {

// Visits each index in [0, total) independently with probability p, in increasing
// order, using geometric gap skipping: O(expected hits) instead of O(total) draws.
template <typename Emit>
void bernoulli_skip(std::uint64_t total, double p, SplitMix64& rng, Emit&& emit) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) emit(i);
    return;
  }
  const double log1mp = std::log1p(-p);
  std::uint64_t idx = 0;
  while (true) {
    const double u = rng.next_unit();
    const double gap = std::floor(std::log(u) / log1mp);
    if (gap >= static_cast<double>(total - idx)) return;
    idx += static_cast<std::uint64_t>(gap);
    if (idx >= total) return;
    emit(idx);
    ++idx;
    if (idx >= total) return;
  }
}

// Lexicographic linear index over pairs (i < j) of [0, n):
// offset(i) = number of pairs with first coordinate < i.
inline std::uint64_t pair_offset(std::uint64_t i, std::uint64_t n) {
  return i * n - i * (i + 1) / 2;
}

inline std::pair<int, int> pair_from_index(std::uint64_t L, std::uint64_t n) {
  // Invert offset(i) <= L < offset(i+1); start from the quadratic-formula guess.
  double guess = static_cast<double>(n) - 0.5 -
                 std::sqrt((static_cast<double>(n) - 0.5) * (static_cast<double>(n) - 0.5) -
                           2.0 * static_cast<double>(L));
  auto i = static_cast<std::uint64_t>(std::max(0.0, guess));
  if (i >= n - 1) i = n - 2;
  while (i + 1 < n - 1 && pair_offset(i + 1, n) <= L) ++i;
  while (i > 0 && pair_offset(i, n) > L) --i;
  const std::uint64_t j = i + 1 + (L - pair_offset(i, n));
  return {static_cast<int>(i), static_cast<int>(j)};
}

Labels random_balanced_labels(int n, int r, SplitMix64& rng) {
  Labels lab;
  lab.r = r;
  lab.assignment.resize(n);
  for (int i = 0; i < n; ++i) lab.assignment[i] = 1 + i / (n / r);
  shuffle(lab.assignment, rng);
  return lab;
}

}  // namespace

SparseGraph SparseGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InvalidParameter("SparseGraph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw InvalidParameter("SparseGraph: self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw InvalidParameter("SparseGraph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidParameter("SparseGraph: duplicate edge");
  }
  SparseGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

SparseGraph gen_er(int n, double d, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("gen_er: n must be >= 1");
  if (d < 0.0 || d > static_cast<double>(n)) {
    throw InvalidParameter("gen_er: need 0 <= d <= n");
  }
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  const auto nn = static_cast<std::uint64_t>(n);
  bernoulli_skip(nn * (nn - 1) / 2, d / n, rng,
                 [&](std::uint64_t L) { edges.push_back(pair_from_index(L, nn)); });
  return SparseGraph::from_edges(n, std::move(edges));
}

std::pair<SparseGraph, Labels> gen_planted_2(int n, double a, double b, std::uint64_t seed) {
  if (n % 2 != 0) throw InvalidParameter("gen_planted_2: n must be even");
  return gen_planted_r(n, 2, a, b, seed);
}

std::pair<SparseGraph, Labels> gen_planted_r(int n, int r, double a, double b,
                                             std::uint64_t seed) {
  if (r < 2) throw InvalidParameter("gen_planted_r: r must be >= 2");
  if (n < r || n % r != 0) throw InvalidParameter("gen_planted_r: r must divide n");
  if (a < 0.0 || a > n || b < 0.0 || b > n) {
    throw InvalidParameter("gen_planted_r: need 0 <= a,b <= n");
  }
  SplitMix64 rng(seed);
  Labels lab = random_balanced_labels(n, r, rng);

  std::vector<std::vector<int>> members(r);
  for (int i = 0; i < n; ++i) members[lab.assignment[i] - 1].push_back(i);

  const auto m = static_cast<std::uint64_t>(n / r);
  std::vector<std::pair<int, int>> edges;
  // Within-community pairs: one triangular index space per community.
  for (int c = 0; c < r; ++c) {
    bernoulli_skip(m * (m - 1) / 2, a / n, rng, [&](std::uint64_t L) {
      auto [i, j] = pair_from_index(L, m);
      edges.emplace_back(members[c][i], members[c][j]);
    });
  }
  // Across-community pairs: an m x m grid per community pair.
  for (int c1 = 0; c1 < r; ++c1) {
    for (int c2 = c1 + 1; c2 < r; ++c2) {
      bernoulli_skip(m * m, b / n, rng, [&](std::uint64_t L) {
        edges.emplace_back(members[c1][L / m], members[c2][L % m]);
      });
    }
  }
  return {SparseGraph::from_edges(n, std::move(edges)), std::move(lab)};
}

// Stub-matching sampler (Steger-Wormald): keep a pool of half-edge stubs, d per
// vertex, and repeatedly match a uniformly random legal pair (no loop, no
// duplicate edge). If the remaining stubs admit no legal pair, restart from
// scratch. Full-restart rejection of a completed pairing would need about
// exp((d-1)/2 + (d-1)^2/4) restarts (hopeless already at d = 10), while
// restarts here are rare for bounded d and the distribution is asymptotically
// uniform, which is all the desk-scale tolerances require.
SparseGraph gen_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) throw InvalidParameter("gen_regular: need 0 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw InvalidParameter("gen_regular: n*d must be even");
  }
  if (d == 0) return SparseGraph::from_edges(n, {});

  SplitMix64 rng(seed);
  constexpr int kMaxRestarts = 1000;
  std::vector<int> stubs;
  std::vector<std::vector<int>> nbrs(n);
  std::vector<std::pair<int, int>> edges;

  const auto adjacent = [&](int u, int v) {
    const auto& lu = nbrs[u];
    return std::find(lu.begin(), lu.end(), v) != lu.end();
  };

  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    stubs.clear();
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    for (auto& l : nbrs) l.clear();
    edges.clear();
    bool stuck = false;

    while (!stubs.empty()) {
      const auto sz = stubs.size();
      bool matched = false;
      // Uniform rejection over stub pairs; legal pairs stay uniform.
      for (int draw = 0; draw < 64 && !matched; ++draw) {
        const auto ai = rng.next_below(sz);
        auto bi = rng.next_below(sz - 1);
        if (bi >= ai) ++bi;
        const int u = stubs[ai];
        const int v = stubs[bi];
        if (u == v || adjacent(u, v)) continue;
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
        edges.emplace_back(u, v);
        // Remove both stubs (order: higher index first).
        const auto hi = std::max(ai, bi);
        const auto lo = std::min(ai, bi);
        stubs[hi] = stubs.back();
        stubs.pop_back();
        stubs[lo] = stubs.back();
        stubs.pop_back();
        matched = true;
      }
      if (matched) continue;
      // Rejection kept failing: enumerate the remaining legal pairs exactly and
      // pick one uniformly, or declare this attempt stuck.
      std::vector<std::pair<std::size_t, std::size_t>> legal;
      for (std::size_t x = 0; x < sz; ++x) {
        for (std::size_t y = x + 1; y < sz; ++y) {
          if (stubs[x] != stubs[y] && !adjacent(stubs[x], stubs[y])) legal.emplace_back(x, y);
        }
      }
      if (legal.empty()) {
        stuck = true;
        break;
      }
      const auto [ai, bi] = legal[rng.next_below(legal.size())];
      const int u = stubs[ai];
      const int v = stubs[bi];
      nbrs[u].push_back(v);
      nbrs[v].push_back(u);
      edges.emplace_back(u, v);
      stubs[bi] = stubs.back();
      stubs.pop_back();
      stubs[ai] = stubs.back();
      stubs.pop_back();
    }
    if (!stuck) return SparseGraph::from_edges(n, std::move(edges));
  }
  throw SamplingFailure("gen_regular: retry cap (1000 restarts) exceeded");
}

double degree_second_moment(const SparseGraph& g) {
  double s = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double deg = static_cast<double>(g.adj[i].size());
    s += deg * deg;
  }
  return s;
}

void save_graph_json(const std::string& path, const SparseGraph& g, const std::string& model,
                     const std::string& params_json, std::uint64_t seed, const Labels* labels) {
  nlohmann::json doc;
  doc["format"] = "graphsdp-graph";
  doc["schema_version"] = 1;
  doc["n"] = g.n;
  doc["model"] = model;
  doc["params"] = params_json.empty() ? nlohmann::json::object()
                                      : nlohmann::json::parse(params_json);
  doc["seed"] = seed;
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (labels != nullptr) {
    doc["labels"] = {{"r", labels->r}, {"assignment", labels->assignment}};
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_graph_json: cannot open " + path);
  out << doc.dump() << "\n";
}

SparseGraph load_graph_json(const std::string& path, std::optional<Labels>* labels) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_graph_json: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("load_graph_json: bad JSON: ") + e.what());
  }
  if (doc.value("format", "") != "graphsdp-graph") {
    throw IoError("load_graph_json: not a graphsdp-graph file");
  }
  const int n = doc.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  if (labels != nullptr) {
    labels->reset();
    if (doc.contains("labels")) {
      Labels lab;
      lab.r = doc["labels"].at("r").get<int>();
      lab.assignment = doc["labels"].at("assignment").get<std::vector<int>>();
      *labels = std::move(lab);
    }
  }
  return SparseGraph::from_edges(n, std::move(edges));
}

void save_edge_list(const std::string& path, const SparseGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_edge_list: cannot open " + path);
  out << "# n=" << g.n << "\n";
  for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
}

SparseGraph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_edge_list: cannot open " + path);
  std::string header;
  std::getline(in, header);
  int n = -1;
  if (std::sscanf(header.c_str(), "# n=%d", &n) != 1) {
    throw IoError("load_edge_list: missing '# n=<n>' header");
  }
  std::vector<std::pair<int, int>> edges;
  int u = 0;
  int v = 0;
  while (in >> u >> v) edges.emplace_back(u, v);
  return SparseGraph::from_edges(n, std::move(edges));
}

}  // namespace graphsdp
