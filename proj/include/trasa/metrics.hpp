#pragma once

#include <cstdint>
#include <vector>

#include "trasa/schedule.hpp"
#include "trasa/tree.hpp"
#include "trasa/types.hpp"

namespace trasa {

struct PacketArrival {
  NodeId origin = kNoNode;
  SlotIndex slot = 0;
};

struct SimTrace {
  /// buffer_series[u][s]: packets held by u after slot s resolves. The sink's
  /// series counts packets delivered so far.
  std::vector<std::vector<std::uint32_t>> buffer_series;
  /// In arrival order (ties by transmitter id).
  std::vector<PacketArrival> packet_arrivals;
  /// Maximal runs of slots where the node transmits or a child transmits.
  std::vector<std::uint32_t> awake_intervals;
};

struct Metrics {
  SlotIndex cycle_length = 0;
  double slot_reuse = 0.0;
  double avg_delay = 0.0;
  std::uint32_t max_buffer = 0;
  std::uint64_t total_switches = 0;
};

/// Slot-by-slot replay with per-node FIFO queues. Each node starts with its
/// own packets queued; forwarded packets queue behind them. Throws
/// CausalityBreach if a transmitter's queue is empty.
SimTrace replay_schedule(const Schedule& schedule, const SpanningTree& tree);

/// Delay is 1-based (arrival slot + 1). max_buffer covers non-sink nodes and
/// includes the cycle-start occupancy.
Metrics compute_metrics(const SimTrace& trace, const Schedule& schedule,
                        const SpanningTree& tree);

}  // namespace trasa
