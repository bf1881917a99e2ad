#ifndef SPNI_SP_DECOMPOSE_HPP
#define SPNI_SP_DECOMPOSE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spni/errors.hpp"
#include "spni/instance.hpp"

namespace spni {

using NodeIndex = std::size_t;

enum class NodeKind { leaf, series, parallel };

inline const char* to_string(NodeKind k) noexcept {
  switch (k) {
  case NodeKind::leaf: return "leaf";
  case NodeKind::series: return "series";
  case NodeKind::parallel: return "parallel";
  }
  return "?";
}

struct TreeNode {
  NodeKind kind = NodeKind::leaf;
  ArcIndex arc = 0;      // leaf only
  NodeIndex left = 0;    // internal only
  NodeIndex right = 0;   // internal only
  VertexIndex source = 0;
  VertexIndex sink = 0;
};

/// Binary decomposition tree of a two-terminal series-parallel graph.
/// Children always precede their parent in `nodes`.
struct DecompositionTree {
  std::vector<TreeNode> nodes;
  NodeIndex root = 0;

  std::size_t leaf_count() const {
    return static_cast<std::size_t>(std::count_if(
        nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.kind == NodeKind::leaf; }));
  }
};

namespace detail {

// Every vertex must lie on some s-t path; no self-loops.
inline void check_well_formed(const Instance& inst) {
  const std::size_t n = inst.vertex_count();
  std::vector<std::vector<VertexIndex>> fwd(n), bwd(n);
  for (const Arc& a : inst.arcs()) {
    if (a.tail == a.head)
      throw MalformedInstance("arc '" + a.id + "' is a self-loop");
    fwd[a.tail].push_back(a.head);
    bwd[a.head].push_back(a.tail);
  }
  auto reach = [n](VertexIndex start, const std::vector<std::vector<VertexIndex>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<VertexIndex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      VertexIndex u = stack.back();
      stack.pop_back();
      for (VertexIndex v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    return seen;
  };
  const auto from_source = reach(inst.source(), fwd);
  if (!from_source[inst.sink()])
    throw MalformedInstance("sink '" + inst.vertex_name(inst.sink()) +
                            "' is unreachable from source '" +
                            inst.vertex_name(inst.source()) + "'");
  const auto to_sink = reach(inst.sink(), bwd);
  for (VertexIndex v = 0; v < n; ++v)
    if (!from_source[v] || !to_sink[v])
      throw MalformedInstance("vertex '" + inst.vertex_name(v) + "' lies on no source-sink path");
}

class Reducer {
public:
  explicit Reducer(const Instance& inst) : inst_(inst), in_(inst.vertex_count()), out_(inst.vertex_count()) {
    tree_.nodes.reserve(inst.arc_count() * 2);
    for (ArcIndex a = 0; a < inst.arc_count(); ++a) {
      const Arc& arc = inst.arc(a);
      tree_.nodes.push_back({NodeKind::leaf, a, 0, 0, arc.tail, arc.head});
      add_edge(arc.tail, arc.head, a);
    }
  }

  DecompositionTree run() {
    // Parallel merges first: groups visited in order of their smallest arc id.
    std::vector<std::pair<VertexIndex, VertexIndex>> order;
    for (const Edge& e : edges_)
      order.emplace_back(e.tail, e.head);
    for (const auto& key : order)
      merge_parallel(key);

    for (VertexIndex v = 0; v < inst_.vertex_count(); ++v)
      push_if_contractible(v);

    while (!candidates_.empty()) {
      auto [key, v] = candidates_.top();
      candidates_.pop();
      if (!contractible(v) || *in_[v].begin() != key)
        continue;
      const EdgeId e_in = *in_[v].begin();
      const EdgeId e_out = *out_[v].begin();
      const VertexIndex u = edges_[e_in].tail;
      const VertexIndex w = edges_[e_out].head;
      const NodeIndex node = make_node(NodeKind::series, edges_[e_in].node, edges_[e_out].node, u, w);
      remove_edge(e_in);
      remove_edge(e_out);
      add_edge(u, w, node);
      merge_parallel({u, w});
      push_if_contractible(w);
      push_if_contractible(u);
    }

    std::size_t live = 0;
    EdgeId last = 0;
    for (EdgeId e = 0; e < edges_.size(); ++e)
      if (edges_[e].alive) {
        ++live;
        last = e;
      }
    if (live != 1 || edges_[last].tail != inst_.source() || edges_[last].head != inst_.sink())
      throw NotSeriesParallel("graph is not two-terminal series-parallel: reduction stalled with " +
                              std::to_string(live) + " arcs remaining");
    tree_.root = edges_[last].node;
    if (tree_.nodes.size() != 2 * inst_.arc_count() - 1)
      throw std::logic_error("decomposition produced " + std::to_string(tree_.nodes.size()) +
                             " nodes for " + std::to_string(inst_.arc_count()) + " arcs");
    return std::move(tree_);
  }

private:
  using EdgeId = std::size_t;
  struct Edge {
    VertexIndex tail;
    VertexIndex head;
    NodeIndex node;
    bool alive;
  };

  void add_edge(VertexIndex tail, VertexIndex head, NodeIndex node) {
    const EdgeId id = edges_.size();
    edges_.push_back({tail, head, node, true});
    out_[tail].insert(id);
    in_[head].insert(id);
    groups_[{tail, head}].insert(id);
  }

  void remove_edge(EdgeId id) {
    Edge& e = edges_[id];
    e.alive = false;
    out_[e.tail].erase(id);
    in_[e.head].erase(id);
    auto it = groups_.find({e.tail, e.head});
    it->second.erase(id);
    if (it->second.empty())
      groups_.erase(it);
  }

  NodeIndex make_node(NodeKind kind, NodeIndex left, NodeIndex right, VertexIndex s, VertexIndex t) {
    tree_.nodes.push_back({kind, 0, left, right, s, t});
    return tree_.nodes.size() - 1;
  }

  // Left-deep merge of all parallel edges tail->head in ascending id order.
  void merge_parallel(std::pair<VertexIndex, VertexIndex> key) {
    auto it = groups_.find(key);
    if (it == groups_.end() || it->second.size() < 2)
      return;
    const std::vector<EdgeId> ids(it->second.begin(), it->second.end());
    NodeIndex acc = edges_[ids.front()].node;
    for (std::size_t i = 1; i < ids.size(); ++i)
      acc = make_node(NodeKind::parallel, acc, edges_[ids[i]].node, key.first, key.second);
    for (EdgeId id : ids)
      remove_edge(id);
    add_edge(key.first, key.second, acc);
  }

  bool contractible(VertexIndex v) const {
    return v != inst_.source() && v != inst_.sink() && in_[v].size() == 1 && out_[v].size() == 1;
  }

  void push_if_contractible(VertexIndex v) {
    if (contractible(v))
      candidates_.emplace(*in_[v].begin(), v);
  }

  const Instance& inst_;
  DecompositionTree tree_;
  std::vector<Edge> edges_;
  std::vector<std::set<EdgeId>> in_;
  std::vector<std::set<EdgeId>> out_;
  std::map<std::pair<VertexIndex, VertexIndex>, std::set<EdgeId>> groups_;
  // (incoming edge id, vertex), smallest incoming edge first.
  std::priority_queue<std::pair<EdgeId, VertexIndex>, std::vector<std::pair<EdgeId, VertexIndex>>,
                      std::greater<>>
      candidates_;
};

} // namespace detail

/// Recognizes a two-terminal series-parallel graph and returns its
/// decomposition tree.
///
/// Reduction: merge parallel arcs, contract interior vertices of in- and
/// out-degree one, until a single source-sink arc remains. When several
/// reductions apply, parallel merges go first and series contractions are
/// taken by ascending incoming arc id, so the tree is a deterministic
/// function of the instance.
///
/// Throws MalformedInstance for self-loops or vertices on no source-sink
/// path, NotSeriesParallel when reduction stalls.
inline DecompositionTree decompose(const Instance& inst) {
  detail::check_well_formed(inst);
  return detail::Reducer(inst).run();
}

struct RecomposeReport {
  bool ok = true;
  std::vector<std::string> trail;

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the tree's compositions and checks that they rebuild exactly the
/// instance's arcs between the right endpoints.
inline RecomposeReport recompose(const DecompositionTree& tree, const Instance& inst) {
  RecomposeReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.trail.push_back(std::move(msg));
  };
  const std::size_t m = inst.arc_count();
  if (m == 0 || tree.nodes.size() != 2 * m - 1)
    fail("expected " + std::to_string(m == 0 ? 0 : 2 * m - 1) + " nodes, found " +
         std::to_string(tree.nodes.size()));
  if (tree.root >= tree.nodes.size()) {
    fail("root index out of range");
    return report;
  }

  std::vector<char> visited(tree.nodes.size(), 0);
  std::vector<char> arc_seen(m, 0);
  std::vector<std::vector<VertexIndex>> vertex_sets(tree.nodes.size());

  // Iterative post-order from the root.
  std::vector<std::pair<NodeIndex, bool>> stack{{tree.root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const TreeNode& node = tree.nodes[id];
    const std::string where = "node " + std::to_string(id) + " (" + to_string(node.kind) + ")";
    if (!expanded) {
      if (visited[id]) {
        fail(where + " reached twice");
        return report;
      }
      visited[id] = 1;
      stack.push_back({id, true});
      if (node.kind != NodeKind::leaf) {
        if (node.left >= tree.nodes.size() || node.right >= tree.nodes.size()) {
          fail(where + " has a child index out of range");
          return report;
        }
        stack.push_back({node.right, false});
        stack.push_back({node.left, false});
      }
      continue;
    }
    if (node.source == node.sink)
      fail(where + " has equal source and sink");
    if (node.kind == NodeKind::leaf) {
      if (node.arc >= m) {
        fail(where + " refers to unknown arc");
        continue;
      }
      if (arc_seen[node.arc])
        fail(where + " repeats arc '" + inst.arc(node.arc).id + "'");
      arc_seen[node.arc] = 1;
      const Arc& arc = inst.arc(node.arc);
      if (arc.tail != node.source || arc.head != node.sink)
        fail(where + " endpoints differ from arc '" + arc.id + "'");
      vertex_sets[id] = {std::min(arc.tail, arc.head), std::max(arc.tail, arc.head)};
      continue;
    }
    const TreeNode& l = tree.nodes[node.left];
    const TreeNode& r = tree.nodes[node.right];
    std::vector<VertexIndex> shared_allowed;
    if (node.kind == NodeKind::series) {
      if (l.sink != r.source)
        fail(where + ": left sink differs from right source");
      if (node.source != l.source || node.sink != r.sink)
        fail(where + ": endpoints do not chain left to right");
      shared_allowed = {l.sink};
    } else {
      if (l.source != node.source || r.source != node.source || l.sink != node.sink ||
          r.sink != node.sink)
        fail(where + ": children do not share both terminals");
      shared_allowed = {std::min(node.source, node.sink), std::max(node.source, node.sink)};
    }
    const auto& lv = vertex_sets[node.left];
    const auto& rv = vertex_sets[node.right];
    std::vector<VertexIndex> shared;
    std::set_intersection(lv.begin(), lv.end(), rv.begin(), rv.end(), std::back_inserter(shared));
    if (shared != shared_allowed)
      fail(where + ": children overlap beyond the identified terminals");
    std::set_union(lv.begin(), lv.end(), rv.begin(), rv.end(), std::back_inserter(vertex_sets[id]));
    vertex_sets[node.left].clear();
    vertex_sets[node.right].clear();
  }

  for (ArcIndex a = 0; a < m; ++a)
    if (!arc_seen[a])
      fail("arc '" + inst.arc(a).id + "' has no leaf");
  for (NodeIndex i = 0; i < tree.nodes.size(); ++i)
    if (!visited[i])
      fail("node " + std::to_string(i) + " unreachable from root");
  const TreeNode& root = tree.nodes[tree.root];
  if (root.source != inst.source() || root.sink != inst.sink())
    fail("root endpoints differ from instance source/sink");
  return report;
}

} // namespace spni

#endif // SPNI_SP_DECOMPOSE_HPP
