#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "trasa/topology.hpp"
#include "trasa/types.hpp"

namespace trasa {

/// Data-gathering tree rooted at the sink, annotated with depths, strict
/// descendant counts and per-node generation rates (packets per cycle).
class SpanningTree {
 public:
  /// Builds from a parent vector (kNoNode for the sink). Children lists are
  /// kept in ascending id order. Throws std::invalid_argument on anything that
  /// is not a tree rooted at `sink`.
  SpanningTree(NodeId sink, std::vector<NodeId> parents,
               std::vector<std::uint32_t> gen_rates = {});

  std::size_t size() const { return parent_.size(); }
  NodeId sink() const { return sink_; }

  NodeId parent(NodeId u) const { return parent_.at(u); }
  std::span<const NodeId> children(NodeId u) const { return children_.at(u); }
  std::uint32_t depth(NodeId u) const { return depth_.at(u); }
  std::uint32_t descendants(NodeId u) const { return descendants_.at(u); }
  std::uint32_t gen_rate(NodeId u) const { return gen_rate_.at(u); }
  std::span<const std::uint32_t> gen_rates() const { return gen_rate_; }

  /// Nodes in breadth-first order from the sink.
  std::span<const NodeId> bfs_order() const { return bfs_order_; }

  /// Copy of this tree with new rates; the sink's rate is forced to zero.
  SpanningTree with_rates(std::vector<std::uint32_t> gen_rates) const;

  /// Copy with every rate multiplied by `factor`.
  SpanningTree scaled_rates(std::uint32_t factor) const;

  bool uniform_unit_rate() const;
  std::uint64_t total_generated() const;

 private:
  NodeId sink_;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> descendants_;
  std::vector<std::uint32_t> gen_rate_;
  std::vector<NodeId> bfs_order_;
};

// Attachment proceeds depth by depth. For depth d, every still-unattached node
// adjacent to some depth-d node is visited in ascending id order and attached
// to the lowest-id depth-d neighbor that still has room. A node blocked at
// depth d is retried at the next depth. Rates default to 1 per non-sink node.
SpanningTree build_spanning_tree(const NetworkGraph& graph, unsigned max_children,
                                 NodeId sink = 0);

/// Packets u must forward over a cycle: its own plus its whole subtree's.
/// Throws std::invalid_argument for the sink.
std::uint64_t subtree_demand(const SpanningTree& tree, NodeId u);

/// Lines `<node_id> <parent_id> <depth> <descendants> <gen_rate>`, sink
/// parent printed as -1.
void write_tree(std::ostream& out, const SpanningTree& tree);

}  // namespace trasa
