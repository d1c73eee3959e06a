#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "trasa/conflict.hpp"
#include "trasa/schedule.hpp"
#include "trasa/tree.hpp"
#include "trasa/types.hpp"

namespace trasa {

/// Sort key for a node: smaller keys are served first.
struct PriorityKey {
  std::int64_t rank;  // signed descendant count, sign chosen by heuristic
  std::uint32_t depth;
  NodeId id;

  auto operator<=>(const PriorityKey&) const = default;
};

/// Heuristic 1 favors nodes with more descendants, heuristic 2 the fewest.
/// Ties fall back to smaller depth, then smaller id.
PriorityKey node_priority(const SpanningTree& tree, NodeId u, Heuristic heuristic);

/// All non-sink nodes, highest priority first.
std::vector<NodeId> priority_order(const SpanningTree& tree, Heuristic heuristic);

/// Greedy traffic-aware slot assignment.
///
/// Each round snapshots the nodes still holding packets, in priority order.
/// The head node opens a fresh window at the end of the cycle, as wide as its
/// buffer. Every other snapshot member that still holds packets and does not
/// conflict with anyone already placed in the window is packed at the window
/// start with a width equal to its buffer, widening the window when needed.
/// Every placed node hands its packets to its parent immediately.
Schedule run_trasa(const SpanningTree& tree, const ConflictMap& conflicts,
                   Heuristic heuristic);

struct SlotBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  /// False when rates are not all 1; the bounds are then the rate-weighted
  /// generalization (sink-children demand, sum of rate * depth).
  bool unit_rate = true;
};

SlotBounds theorem1_bounds(const SpanningTree& tree);

enum class ViolationKind { kConflict, kCausality, kDelivery };

struct Violation {
  ViolationKind kind;
  SlotIndex slot = 0;
  NodeId first = kNoNode;
  NodeId second = kNoNode;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

/// Checks pairwise conflicts per slot, replays buffers to detect
/// transmissions without a packet, and compares sink deliveries with the
/// total generated.
ValidationReport validate_schedule(const Schedule& schedule,
                                   const ConflictMap& conflicts,
                                   const SpanningTree& tree);

std::string to_string(ViolationKind kind);

}  // namespace trasa
