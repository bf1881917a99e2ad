#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "spni/dp_solver.hpp"
#include "spni/instances.hpp"
#include "spni/oracle.hpp"
#include "spni/shortest_path.hpp"
#include "support/reference.hpp"

namespace spni {
namespace {

using testing::make_instance;

const Point kInfPoint = Point::infinite();

std::vector<std::vector<Point>> slices(const BudgetTable& table) {
  std::vector<std::vector<Point>> out;
  for (const BudgetSlice& s : table)
    out.push_back(s.labels.points());
  return out;
}

using Slices = std::vector<std::vector<Point>>;

TEST(LeafLabelsTest, Examples) {
  const Arc cheap{"a", 0, 1, 3, 5, 2};
  EXPECT_EQ(slices(leaf_labels(cheap, 4)),
            (Slices{{{3, 5}}, {{3, 5}}, {kInfPoint}, {kInfPoint}, {kInfPoint}}));
  const Arc expensive{"a", 0, 1, 3, 5, 7};
  EXPECT_EQ(slices(leaf_labels(expensive, 4)), (Slices(5, {{3, 5}})));
  const Arc free{"a", 0, 1, 0, 0, 0};
  EXPECT_EQ(slices(leaf_labels(free, 1)), (Slices{{kInfPoint}, {kInfPoint}}));
}

TEST(LeafLabelsTest, ProvenanceMarksCutArc) {
  const BudgetTable t = leaf_labels(Arc{"a", 0, 1, 3, 5, 1}, 2);
  EXPECT_FALSE(t[0].provenance[0].interdicted);
  EXPECT_TRUE(t[1].provenance[0].interdicted);
  EXPECT_TRUE(t[2].provenance[0].interdicted);
}

const Arc kUpper{"u", 0, 1, 2, 3, 1};
const Arc kLower{"l", 0, 1, 4, 1, 1};

TEST(ComposeParallelTest, Examples) {
  EXPECT_EQ(slices(compose_parallel(leaf_labels(kUpper, 1), leaf_labels(kLower, 1), 1)),
            (Slices{{{2, 1}}, {{2, 3}, {4, 1}}}));
  // A branch that is always cut leaves the other branch's labels.
  const BudgetTable cut = leaf_labels(Arc{"c", 0, 1, 0, 0, 0}, 1);
  EXPECT_EQ(slices(compose_parallel(leaf_labels(kUpper, 1), cut, 1)),
            slices(leaf_labels(kUpper, 1)));
  EXPECT_EQ(slices(compose_parallel(leaf_labels(kUpper, 0), leaf_labels(kLower, 0), 0)),
            (Slices{{{2, 1}}}));
}

TEST(ComposeParallelTest, CrossCheckWithOracle) {
  const Instance inst = make_instance({{"u", "s", "t", 2, 3, 1}, {"l", "s", "t", 4, 1, 1}}, "s", "t", 1);
  EXPECT_EQ(enumerate_frontier(inst).frontier.points(), (std::vector<Point>{{2, 3}, {4, 1}}));
  EXPECT_EQ(enumerate_frontier(inst.with_budget(0)).frontier.points(), (std::vector<Point>{{2, 1}}));
}

TEST(ComposeSeriesTest, Examples) {
  EXPECT_EQ(slices(compose_series(leaf_labels(kUpper, 1), leaf_labels(kLower, 1), 1)),
            (Slices{{{6, 4}}, {kInfPoint}}));
  // A zero-length arc that cannot be cut is the identity.
  const BudgetTable zero = leaf_labels(Arc{"z", 0, 1, 0, 0, 5}, 2);
  const BudgetTable upper = leaf_labels(kUpper, 2);
  EXPECT_EQ(slices(compose_series(upper, zero, 2)), slices(upper));
  // Infinity absorbs.
  const BudgetTable cut = leaf_labels(Arc{"c", 0, 1, 0, 0, 0}, 2);
  EXPECT_EQ(slices(compose_series(upper, cut, 2)), (Slices(3, {kInfPoint})));
}

TEST(ComposeSeriesTest, ProvenancePointsAtCombinedLabels) {
  const BudgetTable a = leaf_labels(kUpper, 2);
  const BudgetTable b = leaf_labels(kLower, 2);
  const BudgetTable s = compose_series(a, b, 2);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t i = 0; i < s[x].labels.size(); ++i) {
      const Provenance& p = s[x].provenance[i];
      EXPECT_EQ(point_add(a[p.split].labels[p.left], b[x - p.split].labels[p.right]), s[x].labels[i]);
    }
}

TEST(ComposeTest, RejectsMismatchedTables) {
  EXPECT_THROW(compose_series(leaf_labels(kUpper, 1), leaf_labels(kLower, 2), 1), std::invalid_argument);
}

TEST(SolveTest, IntractableFamilySmallest) {
  const SolveResult r = solve(gen_intractable(1));
  EXPECT_EQ(r.frontier.points(), (std::vector<Point>{{1, 1}, {2, 0}}));
}

TEST(SolveTest, IntractableFamilyThree) {
  const SolveResult r = solve(gen_intractable(3));
  std::vector<Point> expected;
  for (std::uint64_t f1 : {3, 5, 6, 9, 10, 12})
    expected.push_back({f1, 16 - f1});
  EXPECT_EQ(r.frontier.points(), expected);
  EXPECT_EQ(enumerate_frontier(gen_intractable(3)).frontier.points(), expected);
}

TEST(SolveTest, SingleCuttableArc) {
  const Instance inst = make_instance({{"a", "s", "t", 3, 5, 2}}, "s", "t", 3);
  const SolveResult r = solve(inst);
  EXPECT_EQ(r.frontier.points(), (std::vector<Point>{kInfPoint}));
  EXPECT_EQ(r.strategies[0], InterdictionStrategy({0}));
}

TEST(SolveTest, StrategiesAreFeasibleWitnesses) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = gen_random_sp({1 + seed % 10, seed, 10, 3, seed % 6});
    const SolveResult r = solve(inst);
    ASSERT_EQ(r.strategies.size(), r.frontier.size());
    for (std::size_t i = 0; i < r.frontier.size(); ++i) {
      EXPECT_LE(total_cost(inst, r.strategies[i]), inst.budget());
      EXPECT_EQ(evaluate_strategy(inst, r.strategies[i]), r.frontier[i]) << "seed " << seed;
      EXPECT_EQ(r.strategy_for(r.frontier[i]), &r.strategies[i]);
    }
  }
}

TEST(SolveTest, NonSeriesParallelAndOverflowErrors) {
  EXPECT_THROW(solve(testing::wheatstone()), NotSeriesParallel);
  const Instance huge = make_instance({{"a", "s", "m", ~std::uint64_t{0}, 0, 1}, {"b", "m", "t", 0, 0, 1}},
                                      "s", "t", 1);
  EXPECT_THROW(solve(huge), OverflowError);
}

TEST(SolveTest, BudgetAboveTotalCostMatchesTotalCost) {
  const Instance inst = gen_random_sp({6, 9, 10, 3, 0});
  std::uint64_t total = 0;
  for (const Arc& a : inst.arcs())
    total += a.cost;
  const SolveResult at_total = solve(inst.with_budget(total));
  const SolveResult huge = solve(inst.with_budget(~std::uint64_t{0} >> 1));
  EXPECT_EQ(huge.stats.table_budget, total);
  EXPECT_EQ(at_total.frontier, huge.frontier);
}

TEST(SolvePropertyTest, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = gen_random_sp({1 + seed % 9, seed, 6, 3, seed % 5});
    EXPECT_EQ(solve(inst).frontier, enumerate_frontier(inst).frontier) << "seed " << seed;
  }
}

TEST(SolvePropertyTest, TablesAreMonotoneAndBounded) {
  SolveOptions options;
  options.keep_tables = true;
  options.verify_invariants = true;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = gen_random_sp({2 + seed % 10, seed, 8, 2, 4});
    const SolveResult r = solve(inst, options);
    ASSERT_TRUE(r.tables);
    const std::uint64_t bound = label_count_bound(inst);
    for (const BudgetTable& t : r.tables->tables) {
      EXPECT_EQ(monotonicity_violations(t), 0u);
      for (const BudgetSlice& s : t)
        EXPECT_LE(s.labels.size(), bound);
    }
  }
}

TEST(SolvePropertyTest, ThreadCountDoesNotChangeResult) {
  const Instance inst = gen_random_sp({60, 17, 20, 3, 6});
  const SolveResult one = solve(inst);
  SolveOptions options;
  options.threads = 4;
  const SolveResult four = solve(inst, options);
  EXPECT_EQ(one.frontier, four.frontier);
  EXPECT_EQ(one.strategies, four.strategies);
}

TEST(DecideTest, Examples) {
  const Instance smallest = gen_intractable(1);
  const Decision weak = decide(smallest, {1, 1}, DecideMode::weak);
  EXPECT_TRUE(weak.yes);
  EXPECT_EQ(*weak.point, (Point{1, 1}));
  EXPECT_EQ(evaluate_strategy(smallest, *weak.witness), (Point{1, 1}));
  EXPECT_FALSE(decide(smallest, {1, 1}, DecideMode::strict).yes);
  EXPECT_FALSE(decide(smallest, {3, 3}, DecideMode::weak).yes);
  EXPECT_TRUE(decide(smallest, {0, 0}, DecideMode::weak).yes);
  EXPECT_TRUE(decide(smallest, {1, 0}, DecideMode::strict).yes);
  EXPECT_THROW(decide(smallest, {kInfinity, 0}, DecideMode::weak), InputError);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_TRUE(decide(gen_random_sp({5, seed, 9, 3, 2}), {0, 0}, DecideMode::weak).yes);
}

} // namespace
} // namespace spni
