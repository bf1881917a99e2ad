#ifndef SPNI_INSTANCE_HPP
#define SPNI_INSTANCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spni/errors.hpp"

namespace spni {

using VertexIndex = std::size_t;
using ArcIndex = std::size_t;

/// Arc as it appears in the instance file: endpoints by vertex name.
struct ArcSpec {
  std::string id;
  std::string tail;
  std::string head;
  std::uint64_t len1 = 0;
  std::uint64_t len2 = 0;
  std::uint64_t cost = 0;
};

struct Arc {
  std::string id;
  VertexIndex tail = 0;
  VertexIndex head = 0;
  std::uint64_t len1 = 0;
  std::uint64_t len2 = 0;
  std::uint64_t cost = 0;
};

/// Directed multigraph with two lengths and an interdiction cost per arc,
/// a source, a sink and an interdiction budget. Immutable once built.
///
/// Arcs keep their input order; ArcIndex is the position in arcs().
class Instance {
public:
  Instance(std::vector<std::string> vertices, std::span<const ArcSpec> arcs,
           const std::string& source, const std::string& sink,
           std::uint64_t budget)
      : vertices_(std::move(vertices)), budget_(budget) {
    for (VertexIndex v = 0; v < vertices_.size(); ++v) {
      if (!vertex_lookup_.emplace(vertices_[v], v).second)
        throw InputError("duplicate vertex id '" + vertices_[v] + "'");
    }
    source_ = lookup_vertex(source, "source");
    sink_ = lookup_vertex(sink, "sink");
    if (source_ == sink_)
      throw InputError("source and sink must differ (both '" + source + "')");

    arcs_.reserve(arcs.size());
    for (const ArcSpec& spec : arcs) {
      if (!arc_lookup_.emplace(spec.id, arcs_.size()).second)
        throw InputError("duplicate arc id '" + spec.id + "'");
      arcs_.push_back(Arc{spec.id, lookup_vertex(spec.tail, "tail of arc '" + spec.id + "'"),
                          lookup_vertex(spec.head, "head of arc '" + spec.id + "'"),
                          spec.len1, spec.len2, spec.cost});
      l_max_ = std::max({l_max_, spec.len1, spec.len2});
    }
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcIndex a) const { return arcs_.at(a); }
  VertexIndex source() const noexcept { return source_; }
  VertexIndex sink() const noexcept { return sink_; }
  std::uint64_t budget() const noexcept { return budget_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  /// Largest length of either player over all arcs (0 for an arcless graph).
  std::uint64_t l_max() const noexcept { return l_max_; }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }

  std::optional<VertexIndex> find_vertex(const std::string& name) const {
    auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end())
      return std::nullopt;
    return it->second;
  }

  std::optional<ArcIndex> find_arc(const std::string& id) const {
    auto it = arc_lookup_.find(id);
    if (it == arc_lookup_.end())
      return std::nullopt;
    return it->second;
  }

  /// Upper bound (n-1)*L_max on any finite shortest path length, or nullopt
  /// when it does not fit the 64-bit coordinate range.
  std::optional<std::uint64_t> path_length_bound() const noexcept {
    const std::uint64_t hops = vertices_.empty() ? 0 : vertices_.size() - 1;
    if (l_max_ != 0 && hops > std::numeric_limits<std::uint64_t>::max() / l_max_)
      return std::nullopt;
    return hops * l_max_;
  }

  /// Arcs listed with spec-style endpoint names.
  std::vector<ArcSpec> arc_specs() const {
    std::vector<ArcSpec> out;
    out.reserve(arcs_.size());
    for (const Arc& a : arcs_)
      out.push_back({a.id, vertices_[a.tail], vertices_[a.head], a.len1, a.len2, a.cost});
    return out;
  }

  /// Same graph with a different budget.
  Instance with_budget(std::uint64_t budget) const {
    Instance copy = *this;
    copy.budget_ = budget;
    return copy;
  }

private:
  VertexIndex lookup_vertex(const std::string& name, const std::string& what) const {
    auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end())
      throw InputError(what + " refers to unknown vertex '" + name + "'");
    return it->second;
  }

  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  VertexIndex source_ = 0;
  VertexIndex sink_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t l_max_ = 0;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, ArcIndex> arc_lookup_;
};

/// Set of interdicted arcs, kept sorted and deduplicated.
class InterdictionStrategy {
public:
  InterdictionStrategy() = default;
  explicit InterdictionStrategy(std::vector<ArcIndex> arcs) : arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  }

  const std::vector<ArcIndex>& arcs() const noexcept { return arcs_; }
  bool empty() const noexcept { return arcs_.empty(); }
  std::size_t size() const noexcept { return arcs_.size(); }
  bool contains(ArcIndex a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
  }

  friend bool operator==(const InterdictionStrategy&, const InterdictionStrategy&) = default;
  friend auto operator<=>(const InterdictionStrategy&, const InterdictionStrategy&) = default;

private:
  std::vector<ArcIndex> arcs_;
};

inline void check_strategy(const Instance& inst, const InterdictionStrategy& strategy) {
  for (ArcIndex a : strategy.arcs())
    if (a >= inst.arc_count())
      throw InputError("strategy references unknown arc index " + std::to_string(a));
}

/// Builds a strategy from arc id strings. Unknown ids throw InputError.
inline InterdictionStrategy resolve_strategy(const Instance& inst,
                                             std::span<const std::string> ids) {
  std::vector<ArcIndex> arcs;
  arcs.reserve(ids.size());
  for (const std::string& id : ids) {
    auto a = inst.find_arc(id);
    if (!a)
      throw InputError("unknown arc id '" + id + "'");
    arcs.push_back(*a);
  }
  return InterdictionStrategy(std::move(arcs));
}

inline std::vector<std::string> arc_ids(const Instance& inst,
                                        const InterdictionStrategy& strategy) {
  check_strategy(inst, strategy);
  std::vector<std::string> ids;
  ids.reserve(strategy.size());
  for (ArcIndex a : strategy.arcs())
    ids.push_back(inst.arc(a).id);
  return ids;
}

inline std::uint64_t total_cost(const Instance& inst, const InterdictionStrategy& strategy) {
  check_strategy(inst, strategy);
  std::uint64_t sum = 0;
  for (ArcIndex a : strategy.arcs()) {
    const std::uint64_t c = inst.arc(a).cost;
    if (sum > std::numeric_limits<std::uint64_t>::max() - c)
      throw OverflowError("interdiction cost sum overflows");
    sum += c;
  }
  return sum;
}

inline bool is_feasible(const Instance& inst, const InterdictionStrategy& strategy) {
  return total_cost(inst, strategy) <= inst.budget();
}

} // namespace spni

#endif // SPNI_INSTANCE_HPP
