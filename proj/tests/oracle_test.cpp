#include <algorithm>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "spni/instances.hpp"
#include "spni/oracle.hpp"
#include "spni/shortest_path.hpp"
#include "support/reference.hpp"

namespace spni {
namespace {

using testing::make_instance;

TEST(ShortestPathLengthTest, Examples) {
  const Instance single = make_instance({{"a", "s", "t", 3, 5, 1}}, "s", "t", 1);
  EXPECT_EQ(shortest_path_length(single, InterdictionStrategy({0}), Player::one), kInfinity);
  EXPECT_EQ(shortest_path_length(single, InterdictionStrategy{}, Player::two), ExtNat(5));
  const Instance smallest = gen_intractable(1);
  EXPECT_EQ(shortest_path_length(smallest, InterdictionStrategy({0}), Player::one), ExtNat(1));
}

TEST(EnumerateFrontierTest, IntractableFamilySmallest) {
  const OracleResult r = enumerate_frontier(gen_intractable(1));
  EXPECT_EQ(r.frontier.points(), (std::vector<Point>{{1, 1}, {2, 0}}));
  // 1 empty + 4 singletons.
  EXPECT_EQ(r.strategies_enumerated, 5u);
  ASSERT_EQ(r.strategies_per_point.size(), 2u);
  EXPECT_EQ(r.strategies_per_point[0], (std::vector<InterdictionStrategy>{InterdictionStrategy({0})}));
  EXPECT_EQ(r.strategies_per_point[1], (std::vector<InterdictionStrategy>{InterdictionStrategy({2})}));
}

TEST(EnumerateFrontierTest, ZeroBudgetGivesUninterdictedPoint) {
  const Instance inst = gen_random_digraph({5, 0.7, 3, 9, 2, 0});
  const OracleResult r = enumerate_frontier(inst);
  EXPECT_EQ(r.strategies_enumerated, 1u);
  EXPECT_EQ(r.frontier.points(), (std::vector<Point>{evaluate_strategy(inst, InterdictionStrategy{})}));
}

TEST(EnumerateFrontierTest, TwoParallelArcs) {
  const Instance inst = make_instance({{"u", "s", "t", 2, 3, 1}, {"l", "s", "t", 4, 1, 1}}, "s", "t", 1);
  const OracleResult r = enumerate_frontier(inst);
  EXPECT_EQ(r.strategies_enumerated, 3u);
  EXPECT_EQ(r.frontier.points(), (std::vector<Point>{{2, 3}, {4, 1}}));
}

TEST(EnumerateFrontierTest, ListsEveryStrategyAttainingAPoint) {
  // Cutting either of two parallel zero-cost duplicates changes nothing.
  const Instance inst = make_instance({{"a", "s", "t", 1, 1, 0}, {"b", "s", "t", 1, 1, 0}, {"c", "s", "t", 5, 5, 9}},
                                      "s", "t", 0);
  const OracleResult r = enumerate_frontier(inst);
  ASSERT_EQ(r.frontier.points(), (std::vector<Point>{{5, 5}}));
  EXPECT_EQ(r.strategies_per_point[0], (std::vector<InterdictionStrategy>{InterdictionStrategy({0, 1})}));
  EXPECT_EQ(r.strategies_enumerated, 4u);
}

TEST(EnumerateFrontierTest, CapIsAHardRefusal) {
  const Instance inst = gen_intractable(3);
  try {
    (void)enumerate_frontier(inst, {1});
    FAIL() << "expected InstanceTooLarge";
  } catch (const InstanceTooLarge& e) {
    // 1 + 12 + C(12, 2) subsets of at most two unit-cost arcs.
    EXPECT_EQ(e.estimate(), 1u + 12u + 66u);
    EXPECT_TRUE(e.exact());
  }
  EXPECT_NO_THROW((void)enumerate_frontier(inst, {79}));
}

TEST(CountFeasibleTest, TableAndSearchAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_random_digraph({6, 0.5, seed, 5, 4, seed % 7});
    const FeasibleCount table = count_feasible_strategies(inst, 1000000);
    // Same count by brute subset walk.
    std::uint64_t brute = 0;
    const std::size_t m = inst.arc_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::uint64_t c = 0;
      for (std::size_t a = 0; a < m; ++a)
        if (mask >> a & 1)
          c += inst.arc(a).cost;
      brute += c <= inst.budget();
    }
    EXPECT_EQ(table.count, brute);
  }
}

TEST(CountFeasibleTest, LargeBudgetFallsBackToBoundedSearch) {
  std::vector<ArcSpec> arcs;
  for (int i = 0; i < 40; ++i)
    arcs.push_back({"a" + std::to_string(i), "s", "t", 1, 1, std::uint64_t{1} << 30});
  const Instance inst = make_instance(arcs, "s", "t", std::uint64_t{1} << 40);
  const FeasibleCount count = count_feasible_strategies(inst, 1000);
  EXPECT_FALSE(count.exact);
  EXPECT_GT(count.count, 1000u);
  EXPECT_THROW((void)enumerate_frontier(inst, {1000}), InstanceTooLarge);
}

TEST(EnumerateFrontierPropertyTest, InvariantToArcOrder) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = gen_random_digraph({6, 0.6, seed, 9, 2, 3});
    std::vector<ArcSpec> arcs = inst.arc_specs();
    std::reverse(arcs.begin(), arcs.end());
    const Instance reversed(inst.vertices(), arcs, inst.vertex_name(inst.source()),
                            inst.vertex_name(inst.sink()), inst.budget());
    EXPECT_EQ(enumerate_frontier(inst).frontier, enumerate_frontier(reversed).frontier);
  }
}

TEST(EnumerateFrontierPropertyTest, WitnessesEvaluateToTheirPoints) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = gen_random_digraph({6, 0.5, seed, 9, 2, 3});
    const OracleResult r = enumerate_frontier(inst);
    for (std::size_t i = 0; i < r.frontier.size(); ++i)
      for (const InterdictionStrategy& s : r.strategies_per_point[i]) {
        EXPECT_LE(total_cost(inst, s), inst.budget());
        EXPECT_EQ(evaluate_strategy(inst, s), r.frontier[i]);
      }
  }
}

TEST(EnumerateFrontierPropertyTest, DisconnectedInstanceIsInfinite) {
  const Instance inst = gen_random_digraph({4, 0.0, 1, 9, 2, 3});
  EXPECT_EQ(enumerate_frontier(inst).frontier.points(), (std::vector<Point>{Point::infinite()}));
}

} // namespace
} // namespace spni
