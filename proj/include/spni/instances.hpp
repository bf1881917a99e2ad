#ifndef SPNI_INSTANCES_HPP
#define SPNI_INSTANCES_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spni/errors.hpp"
#include "spni/instance.hpp"
#include "spni/pareto.hpp"
#include "spni/random.hpp"

namespace spni {

// Largest intractability parameter whose lengths 2^n still leave room for
// B * 2^n in 64 bits.
inline constexpr std::uint64_t kMaxIntractableN = 57;

inline void check_intractable_parameter(std::uint64_t n) {
  if (n == 0 || n % 2 == 0)
    throw ParameterError("intractability family needs an odd n >= 1, got " + std::to_string(n));
  if (n > kMaxIntractableN)
    throw ParameterError("intractability family supports n <= " +
                         std::to_string(kMaxIntractableN));
}

/// Chain s = v0 -> v1 -> ... -> v{n+1} = t. Stage i has one free arc
/// "a1_i" with lengths (0, 0) and (n+1)/2 copies "a2_i_c" with lengths
/// (2^i, 2^n - 2^i). Unit costs, budget (n+1)/2.
inline Instance gen_intractable(std::uint64_t n) {
  check_intractable_parameter(n);
  const std::uint64_t budget = (n + 1) / 2;
  std::vector<std::string> vertices;
  for (std::uint64_t i = 0; i <= n + 1; ++i)
    vertices.push_back("v" + std::to_string(i));
  std::vector<ArcSpec> arcs;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i <= n; ++i) {
    const std::string tail = vertices[i];
    const std::string head = vertices[i + 1];
    arcs.push_back({"a1_" + std::to_string(i), tail, head, 0, 0, 1});
    const std::uint64_t len = std::uint64_t{1} << i;
    for (std::uint64_t c = 0; c < budget; ++c)
      arcs.push_back({"a2_" + std::to_string(i) + "_" + std::to_string(c), tail, head, len,
                      top - len, 1});
  }
  return Instance(std::move(vertices), arcs, "v0", "v" + std::to_string(n + 1), budget);
}

/// Closed-form frontier of gen_intractable(n): cutting the free arcs of a
/// B-subset S of stages forces f1 = sum of 2^i over S and f2 = B*2^n - f1.
/// The bitmask of S is f1 itself, so the B-subsets are walked as the
/// (n+1)-bit integers with popcount B, in increasing order.
inline LabelSet predicted_intractable_frontier(std::uint64_t n) {
  check_intractable_parameter(n);
  if (n > 25)
    throw ParameterError("closed-form frontier enumeration supports n <= 25");
  const std::uint64_t budget = (n + 1) / 2;
  const std::uint64_t top = std::uint64_t{1} << n;
  const std::uint64_t limit = std::uint64_t{1} << (n + 1);
  std::vector<Point> points;
  for (std::uint64_t mask = (std::uint64_t{1} << budget) - 1; mask < limit;) {
    points.push_back({mask, budget * top - mask});
    // Next integer with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = ripple | (((ripple ^ mask) >> 2) / low);
  }
  return LabelSet::from_canonical(std::move(points));
}

/// Smallest and largest f1 on the intractability frontier:
/// 2^((n+1)/2) - 1 and 2^(n+1) - 2^((n+1)/2).
inline std::pair<std::uint64_t, std::uint64_t> intractable_f1_bounds(std::uint64_t n) {
  check_intractable_parameter(n);
  const std::uint64_t half = std::uint64_t{1} << ((n + 1) / 2);
  return {half - 1, (std::uint64_t{1} << (n + 1)) - half};
}

/// Number of points of the intractability frontier, C(n+1, (n+1)/2).
inline std::uint64_t intractable_frontier_size(std::uint64_t n) {
  check_intractable_parameter(n);
  const std::uint64_t k = (n + 1) / 2;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    c = c * (n + 1 - k + i) / i;
  return c;
}

struct RandomSpParams {
  std::uint64_t leaves = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_len = 10;
  std::uint64_t max_cost = 3;
  std::uint64_t budget = 3;
};

/// Random two-terminal series-parallel instance.
///
/// Draw order from Rng(seed): the tree shape by Remy's algorithm (uniform
/// over ordered binary trees with `leaves` leaves; per step one node index
/// then one side bit), then one series/parallel bit per internal node in
/// preorder, then per leaf left to right len1, len2 in [0, max_len] and
/// cost in [1, max_cost]. Arcs are named e0, e1, ... left to right; the
/// terminals are "s" and "t" and each series node adds a fresh "v<k>".
inline Instance gen_random_sp(const RandomSpParams& p) {
  if (p.leaves == 0)
    throw ParameterError("sp-random needs at least one leaf");
  if (p.max_cost == 0)
    throw ParameterError("sp-random needs max_cost >= 1");
  Rng rng(p.seed);

  struct Node {
    std::size_t left = 0, right = 0, parent = 0;
    bool leaf = true;
    bool series = false;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{0, 0, kNone, true, false}};
  std::size_t root = 0;
  for (std::uint64_t step = 1; step < p.leaves; ++step) {
    const std::size_t target = rng.below(nodes.size());
    const bool new_leaf_left = rng.below(2) == 1;
    const std::size_t leaf = nodes.size();
    nodes.push_back({0, 0, kNone, true, false});
    const std::size_t joint = nodes.size();
    const std::size_t parent = nodes[target].parent;
    nodes.push_back({new_leaf_left ? leaf : target, new_leaf_left ? target : leaf, parent, false,
                     false});
    if (parent == kNone)
      root = joint;
    else if (nodes[parent].left == target)
      nodes[parent].left = joint;
    else
      nodes[parent].right = joint;
    nodes[target].parent = joint;
    nodes[leaf].parent = joint;
  }

  // Preorder for the composition bits, then left-to-right leaves.
  std::vector<std::size_t> leaves_in_order;
  {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t id = stack.back();
      stack.pop_back();
      if (nodes[id].leaf) {
        leaves_in_order.push_back(id);
        continue;
      }
      nodes[id].series = rng.below(2) == 1;
      stack.push_back(nodes[id].right);
      stack.push_back(nodes[id].left);
    }
  }
  struct Lengths {
    std::uint64_t len1, len2, cost;
  };
  std::vector<Lengths> drawn(nodes.size());
  for (std::size_t id : leaves_in_order) {
    drawn[id].len1 = rng.between(0, p.max_len);
    drawn[id].len2 = rng.between(0, p.max_len);
    drawn[id].cost = rng.between(1, p.max_cost);
  }

  std::vector<std::string> vertices{"s", "t"};
  std::vector<ArcSpec> arcs;
  std::vector<std::tuple<std::size_t, std::string, std::string>> stack{{root, "s", "t"}};
  while (!stack.empty()) {
    auto [id, from, to] = std::move(stack.back());
    stack.pop_back();
    const Node& node = nodes[id];
    if (node.leaf) {
      arcs.push_back({"e" + std::to_string(arcs.size()), from, to, drawn[id].len1,
                      drawn[id].len2, drawn[id].cost});
    } else if (node.series) {
      std::string mid = "v" + std::to_string(vertices.size() - 1);
      vertices.push_back(mid);
      stack.emplace_back(node.right, mid, to);
      stack.emplace_back(node.left, from, mid);
    } else {
      stack.emplace_back(node.right, from, to);
      stack.emplace_back(node.left, from, to);
    }
  }
  return Instance(std::move(vertices), arcs, "s", "t", p.budget);
}

struct RandomDigraphParams {
  std::uint64_t n = 2;
  double arc_prob = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t max_len = 10;
  std::uint64_t max_cost = 3;
  std::uint64_t budget = 1;
};

/// Random DAG on v0..v{n-1} (source v0, sink v{n-1}): each pair i < j, in
/// lexicographic order, gets an arc i -> j with probability arc_prob,
/// followed immediately by its len1, len2 and cost draws. The result need
/// not be series-parallel or even connect s to t.
inline Instance gen_random_digraph(const RandomDigraphParams& p) {
  if (p.n < 2)
    throw ParameterError("digraph-random needs n >= 2");
  if (!(p.arc_prob >= 0.0 && p.arc_prob <= 1.0))
    throw ParameterError("arc probability must lie in [0, 1]");
  if (p.max_cost == 0)
    throw ParameterError("digraph-random needs max_cost >= 1");
  Rng rng(p.seed);
  std::vector<std::string> vertices;
  for (std::uint64_t i = 0; i < p.n; ++i)
    vertices.push_back("v" + std::to_string(i));
  std::vector<ArcSpec> arcs;
  for (std::uint64_t i = 0; i < p.n; ++i)
    for (std::uint64_t j = i + 1; j < p.n; ++j) {
      if (!rng.chance(p.arc_prob))
        continue;
      ArcSpec arc{"e" + std::to_string(arcs.size()), vertices[i], vertices[j], 0, 0, 0};
      arc.len1 = rng.between(0, p.max_len);
      arc.len2 = rng.between(0, p.max_len);
      arc.cost = rng.between(1, p.max_cost);
      arcs.push_back(std::move(arc));
    }
  const std::string source = vertices.front();
  const std::string sink = vertices.back();
  return Instance(std::move(vertices), arcs, source, sink, p.budget);
}

} // namespace spni

#endif // SPNI_INSTANCES_HPP
