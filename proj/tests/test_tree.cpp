#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace trasa;
using namespace trasa::testing;

namespace {

void check_tree_invariants(const NetworkGraph& g, const SpanningTree& t, unsigned max_children) {
  const auto hops = g.hop_distances(t.sink());
  CHECK(t.depth(t.sink()) == 0);
  CHECK(t.descendants(t.sink()) == g.size() - 1);
  for (NodeId u = 0; u < t.size(); ++u) {
    CHECK(t.children(u).size() <= max_children);
    std::uint32_t expected = 0;
    for (NodeId c : t.children(u)) expected += 1 + t.descendants(c);
    CHECK(t.descendants(u) == expected);
    if (u == t.sink()) continue;
    CHECK(g.adjacent(u, t.parent(u)));
    CHECK(t.depth(u) == t.depth(t.parent(u)) + 1);
    CHECK(t.depth(u) >= static_cast<std::uint32_t>(hops[u]));
  }
}

}  // namespace

TEST_CASE("three mutually invisible neighbors all hang off the sink") {
  const auto g = star_graph(3);
  const auto t = build_spanning_tree(g, 3);
  for (NodeId u = 1; u <= 3; ++u) {
    CHECK(t.parent(u) == 0);
    CHECK(t.depth(u) == 1);
  }
}

TEST_CASE("degree bound pushes the highest id down a level") {
  // Four nodes clustered next to the sink, all mutually adjacent.
  const NetworkGraph g({{0.0, 0.0}, {0.10, 0.0}, {0.12, 0.02}, {0.14, 0.0}, {0.11, 0.05}},
                       0.4, Area{1.0, 1.0});
  const auto t = build_spanning_tree(g, 3);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(2) == 0);
  CHECK(t.parent(3) == 0);
  CHECK(t.parent(4) == 1);
  CHECK(t.depth(4) == 2);
  check_tree_invariants(g, t, 3);
}

TEST_CASE("disconnected and infeasible graphs are rejected") {
  const NetworkGraph split({{0.0, 0.0}, {0.9, 0.9}}, 0.4, Area{1.0, 1.0});
  CHECK_THROWS_AS(build_spanning_tree(split, 3), DisconnectedError);
  CHECK_THROWS_AS(build_spanning_tree(star_graph(5), 3), InfeasibleError);
  CHECK_NOTHROW(build_spanning_tree(star_graph(5), 5));
}

TEST_CASE("blocked node attaches at the smallest feasible depth") {
  // Sink 0 full with 1 and 2. Node 3 sees the sink and node 4 only; node 4
  // sees 1. So 4 sits at depth 2 and 3 must go under it at depth 3.
  const NetworkGraph g({{0.0, 0.0}, {0.3, 0.0}, {-0.3, 0.0}, {0.0, 0.35}, {0.3, 0.3}},
                       0.4, Area{1.0, 1.0});
  REQUIRE_FALSE(g.adjacent(3, 1));
  REQUIRE(g.adjacent(3, 4));
  const auto t = build_spanning_tree(g, 2);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(2) == 0);
  CHECK(t.parent(4) == 1);
  CHECK(t.parent(3) == 4);
  CHECK(t.depth(3) == 3);
}

TEST_CASE("random trees satisfy the structural invariants") {
  int built = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = generate_random_graph(40, Area{1.0, 1.0}, 0.4, seed);
    if (!is_connected(g)) continue;
    for (unsigned k : {2u, 3u, 5u}) {
      try {
        const auto t = build_spanning_tree(g, k);
        check_tree_invariants(g, t, k);
        const auto again = build_spanning_tree(g, k);
        for (NodeId u = 1; u < g.size(); ++u) CHECK(again.parent(u) == t.parent(u));
        ++built;
      } catch (const InfeasibleError&) {
      }
    }
  }
  CHECK(built > 50);
}

TEST_CASE("subtree demand") {
  const auto chain = build_spanning_tree(chain_graph(), 3);
  CHECK(subtree_demand(chain, 2) == 1);
  CHECK(subtree_demand(chain, 1) == 2);
  CHECK_THROWS_AS(subtree_demand(chain, 0), std::invalid_argument);

  const auto weighted = chain.with_rates({9, 3, 5});
  CHECK(weighted.gen_rate(0) == 0);
  CHECK(subtree_demand(weighted, 1) == 8);

  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto inst = random_instance(35, seed, 2, InterferenceVariant::kAllLinks);
    if (!inst) continue;
    const auto members = subtree_members(inst->tree);
    for (NodeId u = 1; u < inst->tree.size(); ++u) {
      CHECK(subtree_demand(inst->tree, u) == members[u].size());
      CHECK(subtree_demand(inst->tree, u) == 1 + inst->tree.descendants(u));
    }
  }
}

TEST_CASE("sum of rate times depth counts every hop") {
  auto inst = random_instance(30, 3, 2, InterferenceVariant::kAllLinks);
  REQUIRE(inst);
  std::uint64_t hops = 0;
  for (NodeId u = 1; u < inst->tree.size(); ++u) hops += subtree_demand(inst->tree, u);
  std::uint64_t weighted = 0;
  for (NodeId u = 1; u < inst->tree.size(); ++u) weighted += inst->tree.depth(u);
  CHECK(hops == weighted);
}

TEST_CASE("parent vectors that are not trees are rejected") {
  CHECK_THROWS_AS(SpanningTree(0, {kNoNode, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTree(0, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTree(0, {kNoNode, 0}, {1}), std::invalid_argument);
}

TEST_CASE("tree dump format") {
  const auto t = build_spanning_tree(chain_graph(), 3);
  std::ostringstream out;
  write_tree(out, t);
  CHECK(out.str() == "0 -1 0 2 0\n1 0 1 1 1\n2 1 2 0 1\n");
}
