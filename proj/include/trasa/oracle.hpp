#pragma once

#include <cstdint>
#include <vector>

#include "trasa/conflict.hpp"
#include "trasa/schedule.hpp"
#include "trasa/tree.hpp"

namespace trasa {

/// Colors indexed by node id; 0 means uncolored (the sink, and nodes with
/// zero traffic demand).
struct Coloring {
  std::vector<std::uint32_t> colors;

  bool operator==(const Coloring&) const = default;
};

inline constexpr std::size_t kOracleMaxNodes = 8;

/// Minimum cycle length over all conflict-free schedules that deliver every
/// packet within the cycle. Exhaustive depth-first branch and bound over
/// per-node buffer vectors; each step fires a maximal independent set of the
/// nodes holding packets. Throws TooLargeError above kOracleMaxNodes nodes.
std::uint64_t optimal_schedule_length(const SpanningTree& tree,
                                      const ConflictMap& conflicts);

/// Serves color classes in increasing order. Each class gets a region as
/// wide as its largest subtree demand and every member transmits its whole
/// demand from the start of that region. Throws InvalidColoringError when a
/// demanding node is uncolored or a child does not have a smaller color than
/// its non-sink parent; conflicts are not checked here (see
/// validate_coloring).
Schedule coloring_to_schedule(const Coloring& coloring, const SpanningTree& tree);

/// Length coloring_to_schedule will produce: sum over classes of the largest
/// member demand.
std::uint64_t coloring_schedule_length(const Coloring& coloring,
                                       const SpanningTree& tree);

/// Orders the distinct final-transmission slots; nodes finishing in the i-th
/// of them get color i (1-based). Throws std::invalid_argument if the schedule
/// does not validate.
Coloring schedule_to_coloring(const Schedule& schedule, const SpanningTree& tree,
                              const ConflictMap& conflicts);

bool validate_coloring(const Coloring& coloring, const ConflictMap& conflicts,
                       const SpanningTree& tree);

}  // namespace trasa
