#ifndef SPNI_ORACLE_HPP
#define SPNI_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <vector>

#include "spni/errors.hpp"
#include "spni/instance.hpp"
#include "spni/pareto.hpp"
#include "spni/point.hpp"
#include "spni/shortest_path.hpp"

namespace spni {

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 24;

struct OracleOptions {
  std::uint64_t cap = kDefaultOracleCap;
};

/// Ground truth by exhaustive enumeration. All strategies attaining each
/// frontier point are listed, in enumeration order.
struct OracleResult {
  LabelSet frontier;
  std::vector<std::vector<InterdictionStrategy>> strategies_per_point; // parallel to frontier
  std::uint64_t strategies_enumerated = 0;
};

struct FeasibleCount {
  std::uint64_t count = 0; // saturated at UINT64_MAX
  bool exact = true;
};

/// Counts subsets of arcs with total cost <= B. Uses a counting table over
/// cost sums when it is small; otherwise counts by pruned search and stops
/// once `stop_above` is exceeded (count is then a lower bound).
inline FeasibleCount count_feasible_strategies(const Instance& inst, std::uint64_t stop_above) {
  constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 20;
  constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t cost_sum = 0;
  for (const Arc& a : inst.arcs())
    cost_sum = (a.cost > kSat - cost_sum) ? kSat : cost_sum + a.cost;
  const std::uint64_t horizon = std::min(cost_sum, inst.budget());

  if (horizon < kMaxTable) {
    // ways[c] = number of subsets with cost exactly c, saturating.
    std::vector<std::uint64_t> ways(horizon + 1, 0);
    ways[0] = 1;
    for (const Arc& a : inst.arcs()) {
      if (a.cost > horizon)
        continue;
      for (std::uint64_t c = horizon + 1; c-- > a.cost;) {
        const std::uint64_t add = ways[c - a.cost];
        ways[c] = add > kSat - ways[c] ? kSat : ways[c] + add;
      }
    }
    std::uint64_t total = 0;
    for (std::uint64_t w : ways)
      total = w > kSat - total ? kSat : total + w;
    return {total, true};
  }

  std::uint64_t seen = 0;
  bool stopped = false;
  auto walk = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (stopped)
      return;
    if (i == inst.arc_count()) {
      if (++seen > stop_above)
        stopped = true;
      return;
    }
    self(self, i + 1, remaining);
    const std::uint64_t c = inst.arc(i).cost;
    if (c <= remaining)
      self(self, i + 1, remaining - c);
  };
  walk(walk, 0, inst.budget());
  return {seen, !stopped};
}

namespace detail {

// Pareto archive keyed by point; keys stay mutually non-dominated.
class FrontierArchive {
public:
  void offer(const Point& p, const std::vector<ArcIndex>& strategy) {
    auto it = archive_.lower_bound(Point{p.f1, ExtNat(0)});
    if (it != archive_.end() && it->first.f2 >= p.f2) {
      if (it->first == p)
        it->second.emplace_back(strategy);
      return;
    }
    // Nothing weakly dominates p; drop what p dominates.
    if (it != archive_.end() && it->first.f1 == p.f1)
      it = archive_.erase(it);
    while (it != archive_.begin()) {
      auto prev = std::prev(it);
      if (prev->first.f2 > p.f2)
        break;
      archive_.erase(prev);
    }
    archive_.emplace_hint(it, p, std::vector<InterdictionStrategy>{InterdictionStrategy(strategy)});
  }

  OracleResult finish(std::uint64_t enumerated) && {
    OracleResult result;
    std::vector<Point> points;
    for (auto& [p, strategies] : archive_) {
      points.push_back(p);
      result.strategies_per_point.push_back(std::move(strategies));
    }
    result.frontier = LabelSet::from_canonical(std::move(points));
    result.strategies_enumerated = enumerated;
    return result;
  }

private:
  std::map<Point, std::vector<InterdictionStrategy>> archive_;
};

} // namespace detail

/// Enumerates every feasible strategy (include/exclude per arc in index
/// order, pruned on remaining budget), evaluates each with two shortest
/// path searches and keeps the non-dominated points.
///
/// Works on any directed graph. Throws InstanceTooLarge when the number of
/// feasible strategies exceeds `options.cap`.
inline OracleResult enumerate_frontier(const Instance& inst, const OracleOptions& options = {}) {
  const FeasibleCount count = count_feasible_strategies(inst, options.cap);
  if (!count.exact || count.count > options.cap)
    throw InstanceTooLarge(count.count, options.cap, count.exact);

  ShortestPathEngine engine(inst);
  ArcMask removed(inst.arc_count(), 0);
  std::vector<ArcIndex> chosen;
  detail::FrontierArchive archive;
  std::uint64_t enumerated = 0;

  auto walk = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (i == inst.arc_count()) {
      ++enumerated;
      archive.offer(engine.evaluate(removed), chosen);
      return;
    }
    self(self, i + 1, remaining);
    const std::uint64_t c = inst.arc(i).cost;
    if (c <= remaining) {
      removed[i] = 1;
      chosen.push_back(i);
      self(self, i + 1, remaining - c);
      chosen.pop_back();
      removed[i] = 0;
    }
  };
  walk(walk, 0, inst.budget());
  return std::move(archive).finish(enumerated);
}

} // namespace spni

#endif // SPNI_ORACLE_HPP
