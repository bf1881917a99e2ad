#ifndef SPNI_DP_SOLVER_HPP
#define SPNI_DP_SOLVER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "spni/errors.hpp"
#include "spni/instance.hpp"
#include "spni/pareto.hpp"
#include "spni/point.hpp"
#include "spni/sp_decompose.hpp"

namespace spni {

#ifdef NDEBUG
inline constexpr bool kDebugBuild = false;
#else
inline constexpr bool kDebugBuild = true;
#endif

/// How a label was formed. Leaves record whether the arc is cut; internal
/// nodes record the budget split k and the indices of the combined labels
/// in the left child's slice k and the right child's slice x-k.
struct Provenance {
  std::size_t split = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  bool interdicted = false;
};

/// Labels of one subgraph under one budget allotment.
struct BudgetSlice {
  LabelSet labels;
  std::vector<Provenance> provenance; // parallel to labels
};

/// Slice x holds the labels for budget allotment exactly x, x = 0..B.
using BudgetTable = std::vector<BudgetSlice>;

struct ComposeStats {
  std::chrono::nanoseconds filter_time{0};
  std::size_t candidates = 0;
};

/// Leaf table: the arc's lengths while the allotment is below its cost,
/// (inf, inf) from its cost on. An arc costing more than B is never cut.
inline BudgetTable leaf_labels(const Arc& arc, std::uint64_t budget) {
  BudgetTable table(budget + 1);
  const Point intact{arc.len1, arc.len2};
  for (std::uint64_t x = 0; x <= budget; ++x) {
    const bool cut = arc.cost <= budget && x >= arc.cost;
    table[x].labels = LabelSet::from_canonical({cut ? Point::infinite() : intact});
    table[x].provenance = {Provenance{0, 0, 0, cut}};
  }
  return table;
}

namespace detail {

struct Candidate {
  Point point;
  Provenance provenance;
};

template <class Combine>
BudgetTable compose(const BudgetTable& first, const BudgetTable& second, std::uint64_t budget,
                    Combine combine, ComposeStats* stats) {
  if (first.size() != budget + 1 || second.size() != budget + 1)
    throw std::invalid_argument("compose: tables must have budget + 1 slices");
  BudgetTable out(budget + 1);
  std::vector<Candidate> candidates;
  for (std::size_t x = 0; x <= budget; ++x) {
    // Generation order (k, i, j) ascending; the stable filter keeps the
    // first of equal points, i.e. the smallest provenance.
    candidates.clear();
    for (std::size_t k = 0; k <= x; ++k) {
      const auto& a = first[k].labels.points();
      const auto& b = second[x - k].labels.points();
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          candidates.push_back({combine(a[i], b[j]), Provenance{k, i, j, false}});
    }
    const auto start = std::chrono::steady_clock::now();
    if (stats)
      stats->candidates += candidates.size();
    std::vector<Candidate> kept = filter_nondominated(std::move(candidates), &Candidate::point);
    candidates = {};
    std::vector<Point> points;
    points.reserve(kept.size());
    out[x].provenance.reserve(kept.size());
    for (const Candidate& c : kept) {
      points.push_back(c.point);
      out[x].provenance.push_back(c.provenance);
    }
    out[x].labels = LabelSet::from_canonical(std::move(points));
    if (stats)
      stats->filter_time += std::chrono::steady_clock::now() - start;
  }
  return out;
}

} // namespace detail

/// Parallel composition: slice x is the non-dominated part of the
/// componentwise minima over all splits k + (x - k) = x.
inline BudgetTable compose_parallel(const BudgetTable& first, const BudgetTable& second,
                                    std::uint64_t budget, ComposeStats* stats = nullptr) {
  return detail::compose(first, second, budget,
                         [](const Point& a, const Point& b) { return point_min(a, b); }, stats);
}

/// Series composition: as compose_parallel with sums instead of minima.
inline BudgetTable compose_series(const BudgetTable& first, const BudgetTable& second,
                                  std::uint64_t budget, ComposeStats* stats = nullptr) {
  return detail::compose(first, second, budget,
                         [](const Point& a, const Point& b) { return point_add(a, b); }, stats);
}

/// Number of (k, x) pairs with k < x where some label of slice k is not
/// weakly dominated by a label of slice x. With `all_pairs` false only
/// consecutive slices are compared, which suffices by transitivity.
inline std::size_t monotonicity_violations(const BudgetTable& table, bool all_pairs = true) {
  std::size_t violations = 0;
  for (std::size_t x = 1; x < table.size(); ++x) {
    const std::size_t first_k = all_pairs ? 0 : x - 1;
    for (std::size_t k = first_k; k < x; ++k) {
      const auto& upper = table[x].labels.points();
      for (const Point& p : table[k].labels)
        if (!find_cover(upper, p)) {
          ++violations;
          break;
        }
    }
  }
  return violations;
}

/// (n-1) * L_max + 2, saturating: finite first coordinates range over
/// 0..(n-1)L_max, plus the (inf, inf) singleton.
inline std::uint64_t label_count_bound(const Instance& inst) {
  const auto bound = inst.path_length_bound();
  if (!bound || *bound > std::numeric_limits<std::uint64_t>::max() - 2)
    return std::numeric_limits<std::uint64_t>::max();
  return *bound + 2;
}

/// Budget the tables are built for: B clamped to the total arc cost, above
/// which the feasible strategy set no longer grows.
inline std::uint64_t effective_budget(const Instance& inst) {
  std::uint64_t sum = 0;
  for (const Arc& a : inst.arcs()) {
    if (a.cost >= inst.budget() || sum >= inst.budget() - a.cost)
      return inst.budget();
    sum += a.cost;
  }
  return std::min(sum, inst.budget());
}

struct SolveOptions {
  unsigned threads = 1;
  bool verify_invariants = kDebugBuild;
  bool keep_tables = false;
};

struct SolveStats {
  std::chrono::nanoseconds decompose_time{0};
  std::chrono::nanoseconds dp_time{0};
  std::chrono::nanoseconds filter_time{0};
  std::size_t candidates = 0;
  std::size_t max_label_set = 0;
  std::uint64_t table_budget = 0;
};

/// Everything the DP computed, kept for inspection.
struct DpTables {
  DecompositionTree tree;
  std::vector<BudgetTable> tables; // per tree node
  std::uint64_t budget = 0;        // slices are 0..budget
};

struct SolveResult {
  LabelSet frontier;
  std::vector<InterdictionStrategy> strategies; // parallel to frontier
  SolveStats stats;
  std::optional<DpTables> tables;

  /// Strategy stored for a frontier point, if the point is on the frontier.
  const InterdictionStrategy* strategy_for(const Point& p) const {
    const auto& pts = frontier.points();
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p)
      return nullptr;
    return &strategies[static_cast<std::size_t>(it - pts.begin())];
  }
};

namespace detail {

inline void check_table(const BudgetTable& table, NodeIndex node) {
  for (const BudgetSlice& slice : table)
    if (!is_canonical(slice.labels.points()) || slice.provenance.size() != slice.labels.size())
      throw std::logic_error("non-canonical label set at tree node " + std::to_string(node));
  if (monotonicity_violations(table, false) != 0)
    throw std::logic_error("budget monotonicity violated at tree node " + std::to_string(node));
}

// Nodes grouped by height; nodes of one level only read lower levels.
inline std::vector<std::vector<NodeIndex>> levels(const DecompositionTree& tree) {
  std::vector<std::size_t> height(tree.nodes.size(), 0);
  std::vector<std::vector<NodeIndex>> out(1);
  for (NodeIndex i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& n = tree.nodes[i];
    if (n.kind != NodeKind::leaf)
      height[i] = std::max(height[n.left], height[n.right]) + 1;
    if (out.size() <= height[i])
      out.resize(height[i] + 1);
    out[height[i]].push_back(i);
  }
  return out;
}

} // namespace detail

/// Builds the label tables bottom-up over the tree. With threads > 1,
/// nodes of equal height are evaluated concurrently; each table is written
/// once, so the result does not depend on scheduling.
inline DpTables build_tables(const Instance& inst, DecompositionTree tree, std::uint64_t budget,
                             const SolveOptions& options = {}, SolveStats* stats = nullptr) {
  DpTables dp{std::move(tree), {}, budget};
  dp.tables.resize(dp.tree.nodes.size());
  std::vector<ComposeStats> node_stats(dp.tree.nodes.size());

  auto evaluate = [&](NodeIndex id) {
    const TreeNode& node = dp.tree.nodes[id];
    switch (node.kind) {
    case NodeKind::leaf:
      dp.tables[id] = leaf_labels(inst.arc(node.arc), budget);
      break;
    case NodeKind::series:
      dp.tables[id] = compose_series(dp.tables[node.left], dp.tables[node.right], budget,
                                     &node_stats[id]);
      break;
    case NodeKind::parallel:
      dp.tables[id] = compose_parallel(dp.tables[node.left], dp.tables[node.right], budget,
                                       &node_stats[id]);
      break;
    }
    if (options.verify_invariants)
      detail::check_table(dp.tables[id], id);
  };

  for (const auto& level : detail::levels(dp.tree)) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, options.threads), level.size());
    if (workers <= 1) {
      for (NodeIndex id : level)
        evaluate(id);
      continue;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < level.size(); i = next++) {
            try {
              evaluate(level[i]);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure)
                failure = std::current_exception();
            }
          }
        });
    }
    if (failure)
      std::rethrow_exception(failure);
  }

  if (stats) {
    for (const ComposeStats& s : node_stats) {
      stats->filter_time += s.filter_time;
      stats->candidates += s.candidates;
    }
    for (const BudgetTable& t : dp.tables)
      for (const BudgetSlice& slice : t)
        stats->max_label_set = std::max(stats->max_label_set, slice.labels.size());
  }
  return dp;
}

/// Follows provenance from label `index` of slice `x` at the root down to
/// the leaves and collects the cut arcs.
inline InterdictionStrategy recover_strategy(const DpTables& dp, std::uint64_t x,
                                             std::size_t index) {
  std::vector<ArcIndex> cut;
  std::vector<std::tuple<NodeIndex, std::uint64_t, std::size_t>> stack{{dp.tree.root, x, index}};
  while (!stack.empty()) {
    auto [id, budget, i] = stack.back();
    stack.pop_back();
    const TreeNode& node = dp.tree.nodes[id];
    const Provenance& prov = dp.tables[id][budget].provenance.at(i);
    if (node.kind == NodeKind::leaf) {
      if (prov.interdicted)
        cut.push_back(node.arc);
      continue;
    }
    stack.emplace_back(node.right, budget - prov.split, prov.right);
    stack.emplace_back(node.left, prov.split, prov.left);
  }
  return InterdictionStrategy(std::move(cut));
}

/// Non-dominated frontier of a series-parallel instance with one witnessing
/// strategy per point.
///
/// The frontier is the root's slice at the full budget. Throws
/// MalformedInstance or NotSeriesParallel from decompose, and OverflowError
/// when (n-1)*L_max exceeds the coordinate range.
inline SolveResult solve(const Instance& inst, const SolveOptions& options = {}) {
  if (!inst.path_length_bound())
    throw OverflowError("(n-1)*L_max exceeds the 64-bit coordinate range");
  using clock = std::chrono::steady_clock;
  SolveResult result;
  auto t0 = clock::now();
  DecompositionTree tree = decompose(inst);
  auto t1 = clock::now();
  const std::uint64_t budget = effective_budget(inst);
  DpTables dp = build_tables(inst, std::move(tree), budget, options, &result.stats);
  auto t2 = clock::now();
  result.stats.decompose_time = t1 - t0;
  result.stats.dp_time = t2 - t1;
  result.stats.table_budget = budget;

  const BudgetSlice& top = dp.tables[dp.tree.root][budget];
  result.frontier = top.labels;
  result.strategies.reserve(top.labels.size());
  for (std::size_t i = 0; i < top.labels.size(); ++i)
    result.strategies.push_back(recover_strategy(dp, budget, i));
  if (options.keep_tables)
    result.tables = std::move(dp);
  return result;
}

enum class DecideMode { weak, strict };

struct Decision {
  bool yes = false;
  std::optional<Point> point;
  std::optional<InterdictionStrategy> witness;
};

/// Answers "is there a feasible strategy whose objective is >= K" from a
/// computed frontier. Weak mode accepts p >= K componentwise; strict mode
/// additionally requires p != K. The witness is the qualifying frontier
/// point with the smallest f1.
inline Decision decide(const SolveResult& solved, const Point& target, DecideMode mode) {
  if (!target.f1.is_finite() || !target.f2.is_finite())
    throw InputError("decision target must have finite coordinates");
  const auto& pts = solved.frontier.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool ok = mode == DecideMode::weak ? weakly_dominates(pts[i], target)
                                             : dominates(pts[i], target);
    if (ok)
      return {true, pts[i], solved.strategies[i]};
  }
  return {};
}

inline Decision decide(const Instance& inst, const Point& target, DecideMode mode,
                       const SolveOptions& options = {}) {
  if (!target.f1.is_finite() || !target.f2.is_finite())
    throw InputError("decision target must have finite coordinates");
  return decide(solve(inst, options), target, mode);
}

} // namespace spni

#endif // SPNI_DP_SOLVER_HPP
