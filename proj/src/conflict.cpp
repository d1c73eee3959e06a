#include "trasa/conflict.hpp"

#include <queue>
#include <stdexcept>

namespace trasa {

ConflictMap::ConflictMap(std::size_t n, InterferenceVariant variant, unsigned h)
    : n_(n), variant_(variant), h_(h), bits_(n * n, 0) {
  if (h == 0) {
    throw std::invalid_argument("h must be positive");
  }
}

void ConflictMap::set(NodeId u, NodeId v) {
  if (u == v) return;
  bits_[u * n_ + v] = 1;
  bits_[v * n_ + u] = 1;
}

std::size_t ConflictMap::pair_count() const {
  std::size_t count = 0;
  for (auto b : bits_) count += b;
  return count / 2;
}

namespace {

// Depth-limited BFS over an adjacency list; marks every node within h hops.
template <typename Neighbors>
void mark_within(ConflictMap& map, NodeId source, unsigned h, Neighbors&& neighbors) {
  std::vector<int> dist(map.size(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    if (dist[u] == static_cast<int>(h)) continue;
    for (NodeId v : neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        map.set(source, v);
        frontier.push(v);
      }
    }
  }
}

}  // namespace

ConflictMap build_conflict_map(const NetworkGraph& graph, const SpanningTree& tree,
                               InterferenceVariant variant, unsigned h) {
  if (graph.size() != tree.size()) {
    throw std::invalid_argument("tree does not span the graph");
  }
  const std::size_t n = graph.size();
  ConflictMap map(n, variant, h);

  if (variant == InterferenceVariant::kAllLinks) {
    for (NodeId u = 0; u < n; ++u) {
      mark_within(map, u, h, [&](NodeId x) { return graph.neighbors(x); });
    }
  } else {
    std::vector<std::vector<NodeId>> tree_adj(n);
    for (NodeId u = 0; u < n; ++u) {
      if (u == tree.sink()) continue;
      tree_adj[u].push_back(tree.parent(u));
      tree_adj[tree.parent(u)].push_back(u);
    }
    for (NodeId u = 0; u < n; ++u) {
      mark_within(map, u, h, [&](NodeId x) -> const std::vector<NodeId>& {
        return tree_adj[x];
      });
    }
  }

  for (NodeId p = 0; p < n; ++p) {
    const auto kids = tree.children(p);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        map.set(kids[i], kids[j]);
      }
    }
  }
  return map;
}

}  // namespace trasa
