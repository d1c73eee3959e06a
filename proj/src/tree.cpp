#include "trasa/tree.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace trasa {

SpanningTree::SpanningTree(NodeId sink, std::vector<NodeId> parents,
                           std::vector<std::uint32_t> gen_rates)
    : sink_(sink), parent_(std::move(parents)) {
  const std::size_t n = parent_.size();
  if (sink_ >= n) {
    throw std::invalid_argument("sink id out of range");
  }
  if (parent_[sink_] != kNoNode) {
    throw std::invalid_argument("sink must not have a parent");
  }
  if (gen_rates.empty()) {
    gen_rates.assign(n, 1);
  }
  if (gen_rates.size() != n) {
    throw std::invalid_argument("one generation rate per node expected");
  }
  gen_rate_ = std::move(gen_rates);
  gen_rate_[sink_] = 0;

  children_.assign(n, {});
  for (NodeId u = 0; u < n; ++u) {
    if (u == sink_) continue;
    const NodeId p = parent_[u];
    if (p >= n || p == u) {
      throw std::invalid_argument("node " + std::to_string(u) + " has no valid parent");
    }
    children_[p].push_back(u);
  }

  depth_.assign(n, 0);
  bfs_order_.reserve(n);
  bfs_order_.push_back(sink_);
  for (std::size_t i = 0; i < bfs_order_.size(); ++i) {
    const NodeId u = bfs_order_[i];
    for (NodeId c : children_[u]) {
      depth_[c] = depth_[u] + 1;
      bfs_order_.push_back(c);
    }
  }
  if (bfs_order_.size() != n) {
    throw std::invalid_argument("parent vector contains a cycle or unreachable node");
  }

  descendants_.assign(n, 0);
  for (auto it = bfs_order_.rbegin(); it != bfs_order_.rend(); ++it) {
    if (*it != sink_) {
      descendants_[parent_[*it]] += 1 + descendants_[*it];
    }
  }
}

SpanningTree SpanningTree::with_rates(std::vector<std::uint32_t> gen_rates) const {
  return SpanningTree(sink_, parent_, std::move(gen_rates));
}

SpanningTree SpanningTree::scaled_rates(std::uint32_t factor) const {
  std::vector<std::uint32_t> rates = gen_rate_;
  for (auto& r : rates) {
    r *= factor;
  }
  return with_rates(std::move(rates));
}

bool SpanningTree::uniform_unit_rate() const {
  for (NodeId u = 0; u < size(); ++u) {
    if (u != sink_ && gen_rate_[u] != 1) return false;
  }
  return true;
}

std::uint64_t SpanningTree::total_generated() const {
  std::uint64_t total = 0;
  for (auto r : gen_rate_) total += r;
  return total;
}

SpanningTree build_spanning_tree(const NetworkGraph& graph, unsigned max_children,
                                 NodeId sink) {
  if (max_children == 0) {
    throw std::invalid_argument("max_children must be positive");
  }
  const std::size_t n = graph.size();
  if (sink >= n) {
    throw std::invalid_argument("sink id out of range");
  }
  const auto reach = graph.hop_distances(sink);
  if (std::any_of(reach.begin(), reach.end(), [](int d) { return d < 0; })) {
    throw DisconnectedError("graph is disconnected; no spanning tree exists");
  }

  std::vector<NodeId> parent(n, kNoNode);
  std::vector<bool> attached(n, false);
  std::vector<unsigned> child_count(n, 0);
  attached[sink] = true;
  std::size_t attached_total = 1;

  std::vector<NodeId> level{sink};
  while (!level.empty() && attached_total < n) {
    std::vector<NodeId> candidates;
    for (NodeId p : level) {
      for (NodeId v : graph.neighbors(p)) {
        if (!attached[v]) candidates.push_back(v);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    // `level` is ascending, so the first eligible neighbor is the lowest id.
    std::vector<NodeId> next;
    for (NodeId v : candidates) {
      for (NodeId p : level) {
        if (child_count[p] < max_children && graph.adjacent(p, v)) {
          parent[v] = p;
          attached[v] = true;
          ++child_count[p];
          ++attached_total;
          next.push_back(v);
          break;
        }
      }
    }
    level = std::move(next);
  }
  if (attached_total < n) {
    throw InfeasibleError("degree bound " + std::to_string(max_children) +
                          " leaves " + std::to_string(n - attached_total) +
                          " node(s) without a parent");
  }
  return SpanningTree(sink, std::move(parent));
}

std::uint64_t subtree_demand(const SpanningTree& tree, NodeId u) {
  if (u == tree.sink()) {
    throw std::invalid_argument("the sink has no traffic demand");
  }
  std::uint64_t total = 0;
  std::vector<NodeId> stack{u};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    total += tree.gen_rate(x);
    for (NodeId c : tree.children(x)) stack.push_back(c);
  }
  return total;
}

void write_tree(std::ostream& out, const SpanningTree& tree) {
  for (NodeId u = 0; u < tree.size(); ++u) {
    out << u << ' ';
    if (u == tree.sink()) {
      out << -1;
    } else {
      out << tree.parent(u);
    }
    out << ' ' << tree.depth(u) << ' ' << tree.descendants(u) << ' '
        << tree.gen_rate(u) << '\n';
  }
  if (!out) {
    throw OutputError("failed writing tree");
  }
}

}  // namespace trasa
