#include <doctest.h>

#include <map>
#include <queue>

#include "support.hpp"

using namespace trasa;
using namespace trasa::testing;

namespace {

constexpr auto kAll = InterferenceVariant::kAllLinks;
constexpr auto kH1 = Heuristic::kMostDescendantsFirst;

// Plain breadth-first search over buffer vectors, trying every conflict-free
// transmitter subset (not only maximal ones) and no pruning.
std::uint64_t brute_force_length(const SpanningTree& tree, const ConflictMap& conflicts) {
  const std::size_t n = tree.size();
  std::vector<std::uint32_t> start(n, 0);
  for (NodeId u = 0; u < n; ++u) start[u] = u == tree.sink() ? 0 : tree.gen_rate(u);
  std::map<std::vector<std::uint32_t>, std::uint64_t> dist{{start, 0}};
  std::queue<std::vector<std::uint32_t>> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    const auto state = frontier.front();
    frontier.pop();
    const auto d = dist[state];
    if (std::all_of(state.begin(), state.end(), [](auto b) { return b == 0; })) return d;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      bool ok = true;
      for (NodeId u = 0; u < n && ok; ++u) {
        if (!(mask >> u & 1)) continue;
        if (state[u] == 0) ok = false;
        for (NodeId v = u + 1; v < n && ok; ++v) {
          if ((mask >> v & 1) && conflicts.conflicts(u, v)) ok = false;
        }
      }
      if (!ok) continue;
      auto next = state;
      for (NodeId u = 0; u < n; ++u) {
        if (!(mask >> u & 1)) continue;
        --next[u];
        if (tree.parent(u) != tree.sink()) ++next[tree.parent(u)];
      }
      if (dist.emplace(next, d + 1).second) frontier.push(next);
    }
  }
  return 0;
}

Coloring colors(std::vector<std::uint32_t> c) { return Coloring{std::move(c)}; }

}  // namespace

TEST_CASE("optimal length on tiny fixed topologies") {
  const auto chain = build(chain_graph(), 2, kAll);
  CHECK(optimal_schedule_length(chain.tree, chain.conflicts) == 3);
  CHECK(brute_force_length(chain.tree, chain.conflicts) == 3);

  const auto star = build(star_graph(3), 2, kAll);
  CHECK(optimal_schedule_length(star.tree, star.conflicts) == 3);
}

TEST_CASE("oracle rejects large instances") {
  auto big = random_instance(9, 1, 2, kAll, 0.6);
  REQUIRE(big);
  CHECK_THROWS_AS(optimal_schedule_length(big->tree, big->conflicts), TooLargeError);
}

TEST_CASE("oracle matches unpruned brute force and bounds TRASA") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 4 + seed % 3;
    const unsigned h = 1 + seed % 3;
    auto inst = random_instance(n, seed, h, seed % 2 ? InterferenceVariant::kTreeOnly : kAll,
                                0.5, 2);
    if (!inst) continue;
    const auto opt = optimal_schedule_length(inst->tree, inst->conflicts);
    CHECK(opt == brute_force_length(inst->tree, inst->conflicts));
    const auto trasa_len = run_trasa(inst->tree, inst->conflicts, kH1).length();
    CHECK(opt <= trasa_len);
    CHECK(trasa_len <= theorem1_bounds(inst->tree).upper);
    CHECK(opt >= theorem1_bounds(inst->tree).lower);
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("coloring to schedule on the chain") {
  const auto b = build(chain_graph(), 2, kAll);
  const auto c = colors({0, 2, 1});
  CHECK(validate_coloring(c, b.conflicts, b.tree));
  const auto s = coloring_to_schedule(c, b.tree);
  CHECK(s.length() == 3);
  CHECK(s.allocations(2)[0] == Allocation{0, 1});
  CHECK(s.allocations(1)[0] == Allocation{1, 2});
  CHECK(coloring_schedule_length(c, b.tree) == 3);
  CHECK(validate_schedule(s, b.conflicts, b.tree).ok());
}

TEST_CASE("coloring to schedule with an empty node set") {
  const SpanningTree lone(0, {kNoNode});
  const auto s = coloring_to_schedule(colors({0}), lone);
  CHECK(s.length() == 0);
}

TEST_CASE("a shared color class is as wide as its widest member") {
  // Leaves 3 and 4 under different sink children, far apart; 4 makes 2 packets.
  const SpanningTree tree(0, {kNoNode, 0, 0, 1, 2}, {0, 1, 1, 1, 2});
  ConflictMap conflicts(5, kAll, 2);
  conflicts.set(1, 2);
  conflicts.set(1, 3);
  conflicts.set(2, 4);
  conflicts.set(3, 0);
  conflicts.set(4, 0);
  const auto c = colors({0, 2, 3, 1, 1});
  CHECK(validate_coloring(c, conflicts, tree));
  const auto s = coloring_to_schedule(c, tree);
  CHECK(s.allocations(3)[0] == Allocation{0, 1});
  CHECK(s.allocations(4)[0] == Allocation{0, 2});
  CHECK(s.transmitters(0).size() == 2);
  // Regions: color 1 width 2, color 2 width 2, color 3 width 3.
  CHECK(s.length() == 7);
  CHECK(validate_schedule(s, conflicts, tree).ok());
}

TEST_CASE("coloring to schedule rejects broken colorings") {
  const auto b = build(chain_graph(), 2, kAll);
  CHECK_THROWS_AS(coloring_to_schedule(colors({0, 1, 2}), b.tree), InvalidColoringError);
  CHECK_THROWS_AS(coloring_to_schedule(colors({0, 1, 0}), b.tree), InvalidColoringError);
  CHECK_THROWS_AS(coloring_to_schedule(colors({3, 2, 1}), b.tree), InvalidColoringError);
  CHECK_THROWS_AS(coloring_to_schedule(colors({0, 2}), b.tree), InvalidColoringError);
}

TEST_CASE("schedule to coloring") {
  const auto chain = build(chain_graph(), 2, kAll);
  const auto s = run_trasa(chain.tree, chain.conflicts, kH1);
  CHECK(schedule_to_coloring(s, chain.tree, chain.conflicts) == colors({0, 2, 1}));

  const auto star = build(star_graph(3), 2, kAll);
  const auto ss = run_trasa(star.tree, star.conflicts, kH1);
  const auto sc = schedule_to_coloring(ss, star.tree, star.conflicts);
  for (NodeId c = 1; c <= 3; ++c) {
    CHECK(sc.colors[c] == static_cast<std::uint32_t>(ss.last_slot(c) + 1));
  }
  CHECK(validate_coloring(sc, star.conflicts, star.tree));

  Schedule broken(3, 1);
  broken.allocate(1, 0, 1);
  broken.allocate(2, 0, 1);
  CHECK_THROWS_AS(schedule_to_coloring(broken, chain.tree, chain.conflicts),
                  std::invalid_argument);
}

TEST_CASE("validate_coloring") {
  const auto b = build(chain_graph(), 2, kAll);
  CHECK(validate_coloring(colors({0, 2, 1}), b.conflicts, b.tree));
  CHECK_FALSE(validate_coloring(colors({0, 1, 2}), b.conflicts, b.tree));
  CHECK_FALSE(validate_coloring(colors({0, 1, 1}), b.conflicts, b.tree));
  CHECK_FALSE(validate_coloring(colors({1, 2, 1}), b.conflicts, b.tree));
  CHECK_FALSE(validate_coloring(colors({0, 0, 1}), b.conflicts, b.tree));

  // Two nodes two hops apart (siblings excluded) sharing a color.
  const auto four = build(chain_graph(4), 2, kAll);
  CHECK_FALSE(validate_coloring(colors({0, 3, 2, 2}), four.conflicts, four.tree));
  CHECK(validate_coloring(colors({0, 3, 2, 1}), four.conflicts, four.tree));

  // Zero-demand nodes may stay uncolored.
  const auto idle = b.tree.with_rates({0, 1, 0});
  CHECK(validate_coloring(colors({0, 1, 0}), b.conflicts, idle));
}

TEST_CASE("round trip through colorings on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = random_instance(6 + seed % 15, seed, 2, kAll);
    if (!inst) continue;
    const auto s = run_trasa(inst->tree, inst->conflicts, kH1);
    const auto c = schedule_to_coloring(s, inst->tree, inst->conflicts);
    REQUIRE(validate_coloring(c, inst->conflicts, inst->tree));
    const auto back = coloring_to_schedule(c, inst->tree);
    CHECK(validate_schedule(back, inst->conflicts, inst->tree).ok());
    CHECK(back.length() == coloring_schedule_length(c, inst->tree));
  }
}
