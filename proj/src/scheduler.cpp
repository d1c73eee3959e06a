#include "trasa/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace trasa {

PriorityKey node_priority(const SpanningTree& tree, NodeId u, Heuristic heuristic) {
  const auto desc = static_cast<std::int64_t>(tree.descendants(u));
  const std::int64_t rank =
      heuristic == Heuristic::kMostDescendantsFirst ? -desc : desc;
  return {rank, tree.depth(u), u};
}

std::vector<NodeId> priority_order(const SpanningTree& tree, Heuristic heuristic) {
  std::vector<NodeId> order;
  order.reserve(tree.size());
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (u != tree.sink()) order.push_back(u);
  }
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return node_priority(tree, a, heuristic) < node_priority(tree, b, heuristic);
  });
  return order;
}

Schedule run_trasa(const SpanningTree& tree, const ConflictMap& conflicts,
                   Heuristic heuristic) {
  const std::size_t n = tree.size();
  if (conflicts.size() != n) {
    throw std::invalid_argument("conflict map and tree sizes differ");
  }
  const NodeId sink = tree.sink();
  const std::vector<NodeId> order = priority_order(tree, heuristic);

  std::vector<std::uint64_t> demand(tree.gen_rates().begin(), tree.gen_rates().end());
  demand[sink] = 0;
  std::uint64_t pending = 0;
  for (NodeId u : order) pending += demand[u];

  Schedule schedule(n);
  SlotIndex ending = 0;
  std::vector<NodeId> window;
  std::vector<NodeId> ready;

  // Moves u's whole buffer one hop up; the sink's counter is not tracked.
  auto forward = [&](NodeId u) {
    const std::uint64_t d = demand[u];
    demand[u] = 0;
    if (tree.parent(u) == sink) {
      pending -= d;
    } else {
      demand[tree.parent(u)] += d;
    }
  };

  while (pending > 0) {
    ready.clear();
    for (NodeId u : order) {
      if (demand[u] > 0) ready.push_back(u);
    }

    const NodeId head = ready.front();
    const SlotIndex last_ending = ending;
    schedule.add_slots(demand[head]);
    ending += demand[head];
    schedule.allocate(head, last_ending, demand[head]);
    forward(head);
    window.assign(1, head);

    for (std::size_t i = 1; i < ready.size(); ++i) {
      const NodeId v = ready[i];
      const std::uint64_t dv = demand[v];
      if (dv == 0) continue;
      const bool clashes = std::any_of(window.begin(), window.end(),
                                       [&](NodeId w) { return conflicts.conflicts(v, w); });
      if (clashes) continue;
      const SlotIndex width = ending - last_ending;
      if (dv > width) {
        schedule.add_slots(dv - width);
        ending += dv - width;
      }
      schedule.allocate(v, last_ending, dv);
      forward(v);
      window.push_back(v);
    }
  }
  return schedule;
}

SlotBounds theorem1_bounds(const SpanningTree& tree) {
  SlotBounds bounds;
  bounds.unit_rate = tree.uniform_unit_rate();
  for (NodeId c : tree.children(tree.sink())) {
    bounds.lower += subtree_demand(tree, c);
  }
  for (NodeId u = 0; u < tree.size(); ++u) {
    bounds.upper += static_cast<std::uint64_t>(tree.gen_rate(u)) * tree.depth(u);
  }
  return bounds;
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [kind](const Violation& v) { return v.kind == kind; }));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kConflict: return "CONFLICT";
    case ViolationKind::kCausality: return "CAUSALITY";
    case ViolationKind::kDelivery: return "DELIVERY";
  }
  return "UNKNOWN";
}

ValidationReport validate_schedule(const Schedule& schedule,
                                   const ConflictMap& conflicts,
                                   const SpanningTree& tree) {
  ValidationReport report;
  const std::size_t n = tree.size();
  if (schedule.node_count() != n || conflicts.size() != n) {
    throw std::invalid_argument("schedule, conflicts and tree sizes differ");
  }
  const NodeId sink = tree.sink();

  std::vector<std::int64_t> buffer(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    if (u != sink) buffer[u] = tree.gen_rate(u);
  }
  std::uint64_t delivered = 0;

  for (SlotIndex s = 0; s < schedule.length(); ++s) {
    const auto tx = schedule.transmitters(s);
    for (std::size_t i = 0; i < tx.size(); ++i) {
      for (std::size_t j = i + 1; j < tx.size(); ++j) {
        if (conflicts.conflicts(tx[i], tx[j])) {
          report.violations.push_back({ViolationKind::kConflict, s, tx[i], tx[j],
                                       "conflicting nodes share a slot"});
        }
      }
    }
    for (NodeId u : tx) {
      if (u == sink) {
        report.violations.push_back(
            {ViolationKind::kCausality, s, u, kNoNode, "the sink never transmits"});
        continue;
      }
      if (buffer[u] <= 0) {
        report.violations.push_back(
            {ViolationKind::kCausality, s, u, kNoNode, "transmits with an empty buffer"});
      }
    }
    // Packets received in slot s become available from slot s + 1.
    for (NodeId u : tx) {
      if (u == sink || buffer[u] <= 0) continue;
      --buffer[u];
      if (tree.parent(u) == sink) {
        ++delivered;
      } else {
        ++buffer[tree.parent(u)];
      }
    }
  }

  const std::uint64_t generated = tree.total_generated();
  if (delivered != generated) {
    report.violations.push_back({ViolationKind::kDelivery, schedule.length(), sink,
                                 kNoNode,
                                 "sink received " + std::to_string(delivered) + " of " +
                                     std::to_string(generated) + " packets"});
  }
  return report;
}

}  // namespace trasa
