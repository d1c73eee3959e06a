#include "trasa/schedule.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace trasa {

Schedule::Schedule(std::size_t node_count, SlotIndex length)
    : allocations_(node_count), transmitters_(length) {}

void Schedule::add_slots(SlotIndex count) {
  transmitters_.resize(transmitters_.size() + count);
}

void Schedule::allocate(NodeId u, SlotIndex start, SlotIndex width) {
  if (u >= allocations_.size()) {
    throw std::invalid_argument("node id out of range");
  }
  if (width == 0) return;
  if (start + width > length()) {
    throw std::invalid_argument("allocation exceeds cycle length");
  }
  auto& list = allocations_[u];
  for (const Allocation& a : list) {
    if (start < a.end() && a.start < start + width) {
      throw std::invalid_argument("overlapping allocations for node " +
                                  std::to_string(u));
    }
  }
  const Allocation added{start, width};
  list.insert(std::upper_bound(list.begin(), list.end(), added,
                               [](const Allocation& x, const Allocation& y) {
                                 return x.start < y.start;
                               }),
              added);
  for (SlotIndex s = start; s < start + width; ++s) {
    auto& slot = transmitters_[s];
    slot.insert(std::lower_bound(slot.begin(), slot.end(), u), u);
  }
}

SlotIndex Schedule::total_width(NodeId u) const {
  SlotIndex total = 0;
  for (const Allocation& a : allocations_.at(u)) total += a.width;
  return total;
}

long long Schedule::last_slot(NodeId u) const {
  const auto& list = allocations_.at(u);
  if (list.empty()) return -1;
  return static_cast<long long>(list.back().end()) - 1;
}

Schedule Schedule::truncated(SlotIndex new_length) const {
  Schedule out(node_count(), std::min(new_length, length()));
  for (NodeId u = 0; u < node_count(); ++u) {
    for (const Allocation& a : allocations_[u]) {
      if (a.start >= out.length()) continue;
      out.allocate(u, a.start, std::min(a.end(), out.length()) - a.start);
    }
  }
  return out;
}

void write_schedule(std::ostream& out, const Schedule& schedule) {
  out << "schedule " << schedule.length() << '\n';
  for (NodeId u = 0; u < schedule.node_count(); ++u) {
    const auto list = schedule.allocations(u);
    if (list.empty()) continue;
    out << u;
    for (const Allocation& a : list) {
      out << ' ' << a.start << ':' << a.width;
    }
    out << '\n';
  }
  if (!out) {
    throw OutputError("failed writing schedule");
  }
}

Schedule read_schedule(std::istream& in, std::size_t node_count) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty schedule input");
  }
  std::istringstream header(line);
  std::string tag;
  SlotIndex length = 0;
  if (!(header >> tag >> length) || tag != "schedule") {
    throw ParseError("bad schedule header: " + line);
  }
  Schedule schedule(node_count, length);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    NodeId u = 0;
    if (!(row >> u) || u >= node_count) {
      throw ParseError("bad schedule line: " + line);
    }
    std::string token;
    while (row >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) {
        throw ParseError("bad interval '" + token + "'");
      }
      try {
        schedule.allocate(u, std::stoull(token.substr(0, colon)),
                          std::stoull(token.substr(colon + 1)));
      } catch (const std::logic_error& e) {
        throw ParseError("bad interval '" + token + "': " + e.what());
      }
    }
  }
  return schedule;
}

}  // namespace trasa
