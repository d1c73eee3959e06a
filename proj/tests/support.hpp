#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "trasa/conflict.hpp"
#include "trasa/experiment.hpp"
#include "trasa/metrics.hpp"
#include "trasa/oracle.hpp"
#include "trasa/scheduler.hpp"
#include "trasa/topology.hpp"
#include "trasa/tree.hpp"

namespace trasa::testing {

// sink(0) - a(1) - b(2) on a line, range 0.4.
inline NetworkGraph chain_graph(std::size_t n = 3) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({0.3 * static_cast<double>(i), 0.0});
  return NetworkGraph(pts, 0.4, Area{0.3 * static_cast<double>(n), 1.0});
}

// Sink at the center, k leaves on a circle; leaves are mutually out of range
// for k <= 5.
inline NetworkGraph star_graph(std::size_t k) {
  std::vector<Point> pts{{0.5, 0.5}};
  for (std::size_t i = 0; i < k; ++i) {
    const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(k);
    pts.push_back({0.5 + 0.35 * std::cos(angle), 0.5 + 0.35 * std::sin(angle)});
  }
  return NetworkGraph(pts, 0.4, Area{1.0, 1.0});
}

struct Built {
  NetworkGraph graph;
  SpanningTree tree;
  ConflictMap conflicts;
};

inline Built build(NetworkGraph graph, unsigned h = 2,
                   InterferenceVariant variant = InterferenceVariant::kAllLinks,
                   unsigned max_children = 3) {
  SpanningTree tree = build_spanning_tree(graph, max_children);
  ConflictMap conflicts = build_conflict_map(graph, tree, variant, h);
  return {std::move(graph), std::move(tree), std::move(conflicts)};
}

/// Connected random instance with a buildable tree, or nullopt.
inline std::optional<Built> random_instance(std::size_t n, std::uint64_t seed, unsigned h,
                                            InterferenceVariant variant,
                                            double range = 0.4, unsigned max_children = 3) {
  NetworkGraph graph = generate_random_graph(n, Area{1.0, 1.0}, range, seed);
  if (!is_connected(graph)) return std::nullopt;
  try {
    return build(std::move(graph), h, variant, max_children);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

// ---- independent oracles ----

inline std::vector<std::vector<bool>> pairwise_edges(const NetworkGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> e(n, std::vector<bool>(n, false));
  const double r2 = g.range() * g.range();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dx = g.position(i).x - g.position(j).x;
      const double dy = g.position(i).y - g.position(j).y;
      e[i][j] = dx * dx + dy * dy < r2;
    }
  }
  return e;
}

inline constexpr int kInf = 1 << 28;

/// Floyd-Warshall hop distances over an adjacency matrix.
inline std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::vector<std::vector<bool>> tree_adjacency(const SpanningTree& t) {
  std::vector<std::vector<bool>> adj(t.size(), std::vector<bool>(t.size(), false));
  for (NodeId u = 0; u < t.size(); ++u) {
    if (u == t.sink()) continue;
    adj[u][t.parent(u)] = adj[t.parent(u)][u] = true;
  }
  return adj;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Strict descendants by walking parent pointers up from every node.
inline std::vector<std::vector<NodeId>> subtree_members(const SpanningTree& t) {
  std::vector<std::vector<NodeId>> members(t.size());
  for (NodeId v = 0; v < t.size(); ++v) {
    members[v].push_back(v);
    for (NodeId a = v; a != t.sink();) {
      a = t.parent(a);
      members[a].push_back(v);
    }
  }
  return members;
}

}  // namespace trasa::testing
