#ifndef SPNI_SHORTEST_PATH_HPP
#define SPNI_SHORTEST_PATH_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "spni/instance.hpp"
#include "spni/point.hpp"

namespace spni {

enum class Player { one = 1, two = 2 };

/// Single-objective s-t shortest paths on an instance with some arcs removed.
///
/// Holds a CSR out-adjacency built once so that repeated queries (the
/// exhaustive oracle evaluates every feasible strategy) avoid rebuilding it.
class ShortestPathEngine {
public:
  explicit ShortestPathEngine(const Instance& inst)
      : inst_(&inst), offsets_(inst.vertex_count() + 1, 0),
        dist_(inst.vertex_count()) {
    for (const Arc& a : inst.arcs())
      ++offsets_[a.tail + 1];
    for (std::size_t v = 0; v < inst.vertex_count(); ++v)
      offsets_[v + 1] += offsets_[v];
    out_.resize(inst.arc_count());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (ArcIndex a = 0; a < inst.arc_count(); ++a)
      out_[fill[inst.arc(a).tail]++] = a;
  }

  /// Label-setting (Dijkstra) search. Nonzero `removed[a]` drops arc a; an
  /// empty span removes nothing.
  ExtNat length(std::span<const unsigned char> removed, Player player) {
    using Entry = std::pair<std::uint64_t, VertexIndex>;
    std::fill(dist_.begin(), dist_.end(), kInfinity);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    const VertexIndex s = inst_->source();
    const VertexIndex t = inst_->sink();
    dist_[s] = 0;
    queue.emplace(0, s);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (ExtNat(d) != dist_[u])
        continue;
      if (u == t)
        break;
      for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
        const ArcIndex a = out_[i];
        if (!removed.empty() && removed[a])
          continue;
        const Arc& arc = inst_->arc(a);
        const ExtNat candidate = ExtNat(d) + ExtNat(player == Player::one ? arc.len1 : arc.len2);
        if (candidate < dist_[arc.head]) {
          dist_[arc.head] = candidate;
          queue.emplace(candidate.value(), arc.head);
        }
      }
    }
    return dist_[t];
  }

  Point evaluate(std::span<const unsigned char> removed) {
    return {length(removed, Player::one), length(removed, Player::two)};
  }

private:
  const Instance* inst_;
  std::vector<std::size_t> offsets_;
  std::vector<ArcIndex> out_;
  std::vector<ExtNat> dist_;
};

using ArcMask = std::vector<unsigned char>;

inline ArcMask removal_mask(const Instance& inst, const InterdictionStrategy& strategy) {
  check_strategy(inst, strategy);
  ArcMask mask(inst.arc_count(), 0);
  for (ArcIndex a : strategy.arcs())
    mask[a] = 1;
  return mask;
}

/// Shortest s-t path length for one player with `removed` arcs deleted;
/// infinity when the sink is unreachable.
inline ExtNat shortest_path_length(const Instance& inst, const InterdictionStrategy& removed,
                                   Player player) {
  const ArcMask mask = removal_mask(inst, removed);
  ShortestPathEngine engine(inst);
  return engine.length(mask, player);
}

/// Objective pair of a strategy: both players' shortest path lengths in the
/// interdicted graph.
inline Point evaluate_strategy(const Instance& inst, const InterdictionStrategy& strategy) {
  return {shortest_path_length(inst, strategy, Player::one),
          shortest_path_length(inst, strategy, Player::two)};
}

} // namespace spni

#endif // SPNI_SHORTEST_PATH_HPP
