#include "trasa/metrics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace trasa {

SimTrace replay_schedule(const Schedule& schedule, const SpanningTree& tree) {
  const std::size_t n = tree.size();
  if (schedule.node_count() != n) {
    throw std::invalid_argument("schedule and tree sizes differ");
  }
  const NodeId sink = tree.sink();
  const SlotIndex length = schedule.length();

  std::vector<std::deque<NodeId>> queue(n);
  for (NodeId u = 0; u < n; ++u) {
    if (u != sink) queue[u].assign(tree.gen_rate(u), u);
  }

  SimTrace trace;
  trace.buffer_series.assign(n, std::vector<std::uint32_t>(length, 0));
  trace.awake_intervals.assign(n, 0);
  std::vector<bool> was_awake(n, false);
  std::vector<bool> awake(n, false);
  std::vector<std::pair<NodeId, NodeId>> moves;  // (receiver, origin)

  for (SlotIndex s = 0; s < length; ++s) {
    std::fill(awake.begin(), awake.end(), false);
    moves.clear();
    for (NodeId u : schedule.transmitters(s)) {
      if (u == sink || queue[u].empty()) {
        throw CausalityBreach("node " + std::to_string(u) +
                              " has nothing to send in slot " + std::to_string(s));
      }
      moves.emplace_back(tree.parent(u), queue[u].front());
      queue[u].pop_front();
      awake[u] = true;
      awake[tree.parent(u)] = true;
    }
    for (const auto& [receiver, origin] : moves) {
      if (receiver == sink) {
        trace.packet_arrivals.push_back({origin, s});
      } else {
        queue[receiver].push_back(origin);
      }
    }
    for (NodeId u = 0; u < n; ++u) {
      if (u != sink) {
        trace.buffer_series[u][s] = static_cast<std::uint32_t>(queue[u].size());
      } else {
        trace.buffer_series[u][s] = static_cast<std::uint32_t>(trace.packet_arrivals.size());
      }
      if (awake[u] && !was_awake[u]) ++trace.awake_intervals[u];
    }
    std::swap(awake, was_awake);
  }
  return trace;
}

Metrics compute_metrics(const SimTrace& trace, const Schedule& schedule,
                        const SpanningTree& tree) {
  Metrics m;
  m.cycle_length = schedule.length();
  const NodeId sink = tree.sink();

  std::uint64_t transmissions = 0;
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (u != sink) transmissions += subtree_demand(tree, u);
  }
  if (m.cycle_length > 0) {
    m.slot_reuse = static_cast<double>(transmissions) / static_cast<double>(m.cycle_length);
  }

  if (!trace.packet_arrivals.empty()) {
    double total_delay = 0.0;
    for (const auto& arrival : trace.packet_arrivals) {
      total_delay += static_cast<double>(arrival.slot + 1);
    }
    m.avg_delay = total_delay / static_cast<double>(trace.packet_arrivals.size());
  }

  for (NodeId u = 0; u < tree.size(); ++u) {
    if (u == sink) continue;
    m.max_buffer = std::max(m.max_buffer, tree.gen_rate(u));
    for (auto level : trace.buffer_series[u]) {
      m.max_buffer = std::max(m.max_buffer, level);
    }
  }

  for (auto count : trace.awake_intervals) m.total_switches += count;
  return m;
}

}  // namespace trasa
