#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "trasa/types.hpp"

namespace trasa {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Area {
  double width = 1.0;
  double height = 1.0;
};

/// Unit-disk graph over points in a rectangle. Node 0 is the sink by
/// convention. Edges are always derived from positions: (u, v) is an edge iff
/// u != v and their Euclidean distance is strictly below the range.
class NetworkGraph {
 public:
  NetworkGraph(std::vector<Point> positions, double range, Area area,
               std::uint64_t seed = 0);

  std::size_t size() const { return positions_.size(); }
  double range() const { return range_; }
  Area area() const { return area_; }
  std::uint64_t seed() const { return seed_; }

  const Point& position(NodeId u) const { return positions_.at(u); }
  std::span<const Point> positions() const { return positions_; }

  /// Neighbors of u in ascending id order.
  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_.at(u); }
  bool adjacent(NodeId u, NodeId v) const;
  std::size_t edge_count() const;

  /// Hop distance from `source` to every node; -1 for unreachable nodes.
  std::vector<int> hop_distances(NodeId source) const;

 private:
  std::vector<Point> positions_;
  double range_;
  Area area_;
  std::uint64_t seed_;
  std::vector<std::vector<NodeId>> adjacency_;
};

/// Name of the pseudo-random generator behind generate_random_graph.
inline constexpr const char* kGeneratorName = "mt19937_64";

/// Uniform random deployment of n nodes, seeded with std::mt19937_64.
/// Coordinates are built from the top 53 bits of each draw so the output does
/// not depend on the standard library's distribution implementation.
NetworkGraph generate_random_graph(std::size_t n, Area area, double range,
                                   std::uint64_t seed);

/// True iff the hop distance between u and v is between 1 and h.
/// Throws std::invalid_argument if u == v or h == 0.
bool within_h_hops(const NetworkGraph& graph, NodeId u, NodeId v, unsigned h);

/// True iff every node is reachable from the sink (node 0).
bool is_connected(const NetworkGraph& graph);

// Text format: header `graph <n> <R> <width> <height> <seed>`, then one line
// `<id> <x> <y>` per node. Doubles are written in shortest round-trip form.
void write_graph(std::ostream& out, const NetworkGraph& graph);
NetworkGraph read_graph(std::istream& in);

}  // namespace trasa
