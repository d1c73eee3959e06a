#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "trasa/types.hpp"

namespace trasa {

struct Allocation {
  SlotIndex start = 0;
  SlotIndex width = 0;

  SlotIndex end() const { return start + width; }
  bool operator==(const Allocation&) const = default;
};

/// A TDMA cycle: `length` slots, each node's transmit intervals, and the
/// inverse per-slot transmitter sets. Each occupied slot moves one packet
/// from the transmitter to its parent.
class Schedule {
 public:
  explicit Schedule(std::size_t node_count, SlotIndex length = 0);

  std::size_t node_count() const { return allocations_.size(); }
  SlotIndex length() const { return transmitters_.size(); }

  /// Appends `count` empty slots to the end of the cycle.
  void add_slots(SlotIndex count);

  /// Gives `u` the slots [start, start + width). Throws std::invalid_argument
  /// if the interval leaves the cycle or overlaps one of u's intervals.
  void allocate(NodeId u, SlotIndex start, SlotIndex width);

  std::span<const Allocation> allocations(NodeId u) const {
    return allocations_.at(u);
  }
  /// Transmitters of slot s in ascending id order.
  std::span<const NodeId> transmitters(SlotIndex s) const {
    return transmitters_.at(s);
  }

  SlotIndex total_width(NodeId u) const;
  /// Index of u's final occupied slot, or -1 when u never transmits.
  long long last_slot(NodeId u) const;

  /// First `new_length` slots only; allocations are clipped.
  Schedule truncated(SlotIndex new_length) const;

  bool operator==(const Schedule&) const = default;

 private:
  std::vector<std::vector<Allocation>> allocations_;
  std::vector<std::vector<NodeId>> transmitters_;
};

/// Header `schedule <length>`, then per node `<id> <start:width> ...` for
/// every node holding at least one allocation.
void write_schedule(std::ostream& out, const Schedule& schedule);
Schedule read_schedule(std::istream& in, std::size_t node_count);

}  // namespace trasa
