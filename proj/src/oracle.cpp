#include "trasa/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "trasa/scheduler.hpp"

namespace trasa {

namespace {

// Buffers of the non-sink nodes, 8 bits each, in `nodes` order.
using PackedState = std::uint64_t;

class ExactSearch {
 public:
  ExactSearch(const SpanningTree& tree, const ConflictMap& conflicts)
      : tree_(tree) {
    for (NodeId u = 0; u < tree.size(); ++u) {
      if (u != tree.sink()) nodes_.push_back(u);
    }
    std::vector<int> index(tree.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) index[nodes_[i]] = static_cast<int>(i);

    parent_index_.resize(nodes_.size());
    depth_.resize(nodes_.size());
    conflict_mask_.assign(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      parent_index_[i] = index[tree.parent(nodes_[i])];
      depth_[i] = tree.depth(nodes_[i]);
      for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (i != j && conflicts.conflicts(nodes_[i], nodes_[j])) {
          conflict_mask_[i] |= 1u << j;
        }
      }
    }
    const auto kids = tree.children(tree.sink());
    for (std::size_t a = 0; a < kids.size(); ++a) {
      for (std::size_t b = a + 1; b < kids.size(); ++b) {
        if (!conflicts.conflicts(kids[a], kids[b])) serial_sink_ = false;
      }
    }
  }

  std::uint64_t solve() {
    PackedState start = 0;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      start |= PackedState{tree_.gen_rate(nodes_[i])} << (8 * i);
      total += tree_.gen_rate(nodes_[i]);
    }
    if (total > 255) {
      throw TooLargeError("oracle supports at most 255 packets per cycle");
    }
    // A purely sequential schedule always exists: one hop per slot.
    best_ = theorem1_bounds(tree_).upper;
    search(start, 0);
    return best_;
  }

 private:
  std::uint32_t buffer(PackedState s, std::size_t i) const {
    return static_cast<std::uint32_t>((s >> (8 * i)) & 0xff);
  }

  // A packet at depth d needs d more slots. When the sink children pairwise
  // conflict, at most one packet reaches the sink per slot.
  std::uint64_t lower_bound(PackedState s) const {
    std::uint64_t undelivered = 0;
    std::uint64_t deepest = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const auto b = buffer(s, i);
      undelivered += b;
      if (b > 0) deepest = std::max<std::uint64_t>(deepest, depth_[i]);
    }
    return serial_sink_ ? std::max(undelivered, deepest) : deepest;
  }

  void search(PackedState s, std::uint64_t elapsed) {
    if (s == 0) {
      best_ = std::min(best_, elapsed);
      return;
    }
    if (elapsed + lower_bound(s) >= best_) return;
    auto [it, inserted] = visited_.try_emplace(s, elapsed);
    if (!inserted) {
      if (it->second <= elapsed) return;
      it->second = elapsed;
    }

    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (buffer(s, i) > 0) ready.push_back(i);
    }
    const std::uint32_t subsets = 1u << ready.size();
    // Larger transmitter sets first: they tend to tighten best_ sooner.
    std::vector<std::uint32_t> picks;
    for (std::uint32_t pick = 1; pick < subsets; ++pick) {
      std::uint32_t members = 0;
      bool independent = true;
      for (std::size_t k = 0; k < ready.size() && independent; ++k) {
        if (pick & (1u << k)) {
          if (conflict_mask_[ready[k]] & members) independent = false;
          members |= 1u << ready[k];
        }
      }
      if (!independent) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < ready.size() && maximal; ++k) {
        if (!(pick & (1u << k)) && !(conflict_mask_[ready[k]] & members)) maximal = false;
      }
      if (maximal) picks.push_back(members);
    }
    std::sort(picks.begin(), picks.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::popcount(a) > std::popcount(b);
    });

    for (std::uint32_t members : picks) {
      PackedState next = s;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!(members & (1u << i))) continue;
        next -= PackedState{1} << (8 * i);
        if (parent_index_[i] >= 0) next += PackedState{1} << (8 * parent_index_[i]);
      }
      search(next, elapsed + 1);
    }
  }

  const SpanningTree& tree_;
  std::vector<NodeId> nodes_;
  std::vector<int> parent_index_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> conflict_mask_;
  std::unordered_map<PackedState, std::uint64_t> visited_;
  std::uint64_t best_ = 0;
  bool serial_sink_ = true;
};

std::vector<std::uint64_t> demands(const SpanningTree& tree) {
  std::vector<std::uint64_t> d(tree.size(), 0);
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (u != tree.sink()) d[u] = subtree_demand(tree, u);
  }
  return d;
}

// Color -> widest member demand, over colored nodes with positive demand.
std::map<std::uint32_t, std::uint64_t> class_widths(const Coloring& coloring,
                                                    const SpanningTree& tree,
                                                    const std::vector<std::uint64_t>& d) {
  if (coloring.colors.size() != tree.size()) {
    throw InvalidColoringError("coloring size does not match the tree");
  }
  std::map<std::uint32_t, std::uint64_t> widths;
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (u == tree.sink()) {
      if (coloring.colors[u] != 0) throw InvalidColoringError("the sink carries no color");
      continue;
    }
    const auto c = coloring.colors[u];
    if (d[u] == 0) continue;
    if (c == 0) {
      throw InvalidColoringError("node " + std::to_string(u) + " has demand but no color");
    }
    const NodeId p = tree.parent(u);
    if (p != tree.sink() && coloring.colors[p] <= c) {
      throw InvalidColoringError("node " + std::to_string(u) +
                                 " is not colored below its parent");
    }
    auto& w = widths[c];
    w = std::max(w, d[u]);
  }
  return widths;
}

}  // namespace

std::uint64_t optimal_schedule_length(const SpanningTree& tree,
                                      const ConflictMap& conflicts) {
  if (tree.size() > kOracleMaxNodes) {
    throw TooLargeError("exhaustive search is limited to " +
                        std::to_string(kOracleMaxNodes) + " nodes");
  }
  if (conflicts.size() != tree.size()) {
    throw std::invalid_argument("conflict map and tree sizes differ");
  }
  return ExactSearch(tree, conflicts).solve();
}

std::uint64_t coloring_schedule_length(const Coloring& coloring,
                                       const SpanningTree& tree) {
  std::uint64_t total = 0;
  for (const auto& [color, width] : class_widths(coloring, tree, demands(tree))) {
    total += width;
  }
  return total;
}

Schedule coloring_to_schedule(const Coloring& coloring, const SpanningTree& tree) {
  const auto d = demands(tree);
  const auto widths = class_widths(coloring, tree, d);

  Schedule schedule(tree.size());
  std::map<std::uint32_t, SlotIndex> region_start;
  for (const auto& [color, width] : widths) {
    region_start[color] = schedule.length();
    schedule.add_slots(width);
  }
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (u == tree.sink() || d[u] == 0) continue;
    schedule.allocate(u, region_start.at(coloring.colors[u]), d[u]);
  }
  return schedule;
}

Coloring schedule_to_coloring(const Schedule& schedule, const SpanningTree& tree,
                              const ConflictMap& conflicts) {
  if (!validate_schedule(schedule, conflicts, tree).ok()) {
    throw std::invalid_argument("schedule_to_coloring needs a valid schedule");
  }
  std::vector<long long> finishing;
  for (NodeId u = 0; u < tree.size(); ++u) {
    if (schedule.last_slot(u) >= 0) finishing.push_back(schedule.last_slot(u));
  }
  std::sort(finishing.begin(), finishing.end());
  finishing.erase(std::unique(finishing.begin(), finishing.end()), finishing.end());

  Coloring coloring{std::vector<std::uint32_t>(tree.size(), 0)};
  for (NodeId u = 0; u < tree.size(); ++u) {
    const long long last = schedule.last_slot(u);
    if (last < 0) continue;
    const auto pos = std::lower_bound(finishing.begin(), finishing.end(), last);
    coloring.colors[u] = static_cast<std::uint32_t>(pos - finishing.begin()) + 1;
  }
  return coloring;
}

bool validate_coloring(const Coloring& coloring, const ConflictMap& conflicts,
                       const SpanningTree& tree) {
  const std::size_t n = tree.size();
  if (coloring.colors.size() != n || conflicts.size() != n) return false;
  const auto& c = coloring.colors;
  if (c[tree.sink()] != 0) return false;

  for (NodeId u = 0; u < n; ++u) {
    if (u == tree.sink()) continue;
    if (c[u] == 0) {
      if (subtree_demand(tree, u) > 0) return false;
      continue;
    }
    const NodeId p = tree.parent(u);
    if (p != tree.sink() && c[p] <= c[u]) return false;
    for (NodeId v = u + 1; v < n; ++v) {
      if (c[v] == c[u] && conflicts.conflicts(u, v)) return false;
    }
  }
  return true;
}

}  // namespace trasa
