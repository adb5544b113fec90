#pragma once

// Random graph ensembles: Erdos-Renyi G(n, d/n), planted balanced partitions
// G_r(n, a/n, b/n), and random regular graphs, plus degree diagnostics.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphsdp {

// Undirected simple graph. Edges are stored once as (u, v) with u < v,
// 0-indexed and sorted lexicographically; adjacency lists are sorted.
struct SparseGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  // Validates (no self-loops, no duplicates, endpoints in range), normalizes
  // edge order, and builds the adjacency index.
  static SparseGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int degree(int i) const { return static_cast<int>(adj[i].size()); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
};

// Balanced community assignment; values are 1..r, each appearing exactly n/r times.
struct Labels {
  std::vector<int> assignment;
  int r = 1;
};

// G(n, d/n): each of the n(n-1)/2 pairs present independently with probability d/n.
SparseGraph gen_er(int n, double d, std::uint64_t seed);

// Two balanced communities: within-pair probability a/n, across b/n. n must be even.
std::pair<SparseGraph, Labels> gen_planted_2(int n, double a, double b, std::uint64_t seed);

// r balanced communities (r | n); average degree (a + (r-1)b)/r.
std::pair<SparseGraph, Labels> gen_planted_r(int n, int r, double a, double b,
                                             std::uint64_t seed);

// Uniform-degree random graph via stub matching (see gen_regular notes in graph.cpp).
// Requires n*d even and d < n.
SparseGraph gen_regular(int n, int d, std::uint64_t seed);

// Sum of squared degrees, exact.
double degree_second_moment(const SparseGraph& g);

// --- serialization ---

// JSON format: {"format":"graphsdp-graph","schema_version":1,"n":..,"model":..,
// "params":{..},"seed":..,"edges":[[u,v],..]} with labels in an optional sidecar
// field so blind tests can strip them.
void save_graph_json(const std::string& path, const SparseGraph& g,
                     const std::string& model, const std::string& params_json,
                     std::uint64_t seed, const Labels* labels = nullptr);
SparseGraph load_graph_json(const std::string& path, std::optional<Labels>* labels = nullptr);

// Edge-list text interop: "# n=<n>" header then one "u v" line per edge.
void save_edge_list(const std::string& path, const SparseGraph& g);
SparseGraph load_edge_list(const std::string& path);

}  // namespace graphsdp
