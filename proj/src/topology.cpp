#include "trasa/topology.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

namespace trasa {

std::string to_string(InterferenceVariant variant) {
  return variant == InterferenceVariant::kAllLinks ? "all" : "tree";
}

std::string to_string(Heuristic heuristic) {
  return heuristic == Heuristic::kMostDescendantsFirst ? "1" : "2";
}

NetworkGraph::NetworkGraph(std::vector<Point> positions, double range, Area area,
                           std::uint64_t seed)
    : positions_(std::move(positions)),
      range_(range),
      area_(area),
      seed_(seed),
      adjacency_(positions_.size()) {
  if (!(range_ > 0.0)) {
    throw std::invalid_argument("range must be positive");
  }
  const std::size_t n = positions_.size();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double dx = positions_[u].x - positions_[v].x;
      const double dy = positions_[u].y - positions_[v].y;
      if (std::hypot(dx, dy) < range_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
      }
    }
  }
  // Pairs are visited in (u, v) order, so every list is already ascending.
}

bool NetworkGraph::adjacent(NodeId u, NodeId v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t NetworkGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& row : adjacency_) {
    degree_sum += row.size();
  }
  return degree_sum / 2;
}

std::vector<int> NetworkGraph::hop_distances(NodeId source) const {
  std::vector<int> dist(size(), -1);
  std::queue<NodeId> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v : adjacency_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

NetworkGraph generate_random_graph(std::size_t n, Area area, double range,
                                   std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("node count must be at least 1");
  }
  if (!(area.width > 0.0) || !(area.height > 0.0)) {
    throw std::invalid_argument("area dimensions must be positive");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> positions(n);
  for (auto& p : positions) {
    p.x = unit_interval(rng) * area.width;
    p.y = unit_interval(rng) * area.height;
  }
  return NetworkGraph(std::move(positions), range, area, seed);
}

bool within_h_hops(const NetworkGraph& graph, NodeId u, NodeId v, unsigned h) {
  if (u == v) {
    throw std::invalid_argument("within_h_hops requires distinct nodes");
  }
  if (h == 0) {
    throw std::invalid_argument("h must be positive");
  }
  const int d = graph.hop_distances(u).at(v);
  return d >= 1 && d <= static_cast<int>(h);
}

bool is_connected(const NetworkGraph& graph) {
  if (graph.size() == 0) {
    return true;
  }
  const auto dist = graph.hop_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw OutputError("cannot format number");
  }
  return std::string(buf.data(), end);
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last) {
    throw ParseError("malformed number '" + token + "'");
  }
  return value;
}

}  // namespace

void write_graph(std::ostream& out, const NetworkGraph& graph) {
  out << "graph " << graph.size() << ' ' << format_double(graph.range()) << ' '
      << format_double(graph.area().width) << ' '
      << format_double(graph.area().height) << ' ' << graph.seed() << '\n';
  for (NodeId u = 0; u < graph.size(); ++u) {
    const Point& p = graph.position(u);
    out << u << ' ' << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  }
  if (!out) {
    throw OutputError("failed writing graph");
  }
}

NetworkGraph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty graph input");
  }
  std::istringstream header(line);
  std::string tag, range_tok, width_tok, height_tok;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  if (!(header >> tag >> n >> range_tok >> width_tok >> height_tok >> seed) ||
      tag != "graph") {
    throw ParseError("bad graph header: " + line);
  }
  const Area area{parse_double(width_tok), parse_double(height_tok)};
  std::vector<Point> positions(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("graph input ends after " + std::to_string(i) + " nodes");
    }
    std::istringstream row(line);
    std::size_t id = 0;
    std::string x_tok, y_tok;
    if (!(row >> id >> x_tok >> y_tok) || id >= n || seen[id]) {
      throw ParseError("bad node line: " + line);
    }
    seen[id] = true;
    positions[id] = {parse_double(x_tok), parse_double(y_tok)};
  }
  return NetworkGraph(std::move(positions), parse_double(range_tok), area, seed);
}

}  // namespace trasa
