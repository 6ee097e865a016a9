#pragma once

// Explicit-stack driver shared by the branching enumerators. A node expands
// either into a terminal answer or into children, each tagged with the ambient
// set its results are maximal within; finished children are merged with
// maximal_subset_collation before the parent reports upward.

#include <cstddef>
#include <utility>
#include <vector>

#include "afenum/collation.hpp"
#include "afenum/search.hpp"

namespace afenum::detail {

enum class Outcome { Leaf, Pruned, Branch };

template <class Node>
struct Child {
  Node node;
  VertexSet ambient;
};

template <class Node>
struct Step {
  Outcome outcome = Outcome::Pruned;
  std::vector<Extension> results;  // Leaf only
  std::vector<Child<Node>> children;  // Branch only

  static Step leaf(std::vector<Extension> r) { return {Outcome::Leaf, std::move(r), {}}; }
  static Step pruned() { return {Outcome::Pruned, {}, {}}; }
  static Step branch(std::vector<Child<Node>> c) { return {Outcome::Branch, {}, std::move(c)}; }
};

// `expand(node, depth)` returns a Step<Node>.
template <class Node, class Expand>
std::vector<Extension> run_branching(const Framework& af, Node root, Expand&& expand, SearchStats& stats,
                                     const EnumOptions& opts) {
  struct Frame {
    std::vector<Child<Node>> children;
    std::size_t next = 0;
    std::size_t depth = 0;
    std::vector<CollationPair> pairs;
  };
  std::vector<Frame> stack;
  std::vector<Extension> finished;

  // Returns true when the node was terminal; its answer is left in `finished`.
  auto visit = [&](Node& node, std::size_t depth) -> bool {
    ++stats.nodes;
    if (depth > stats.max_depth) stats.max_depth = depth;
    if ((stats.nodes & 1023u) == 0) opts.limits.check();
    Step<Node> step = expand(node, depth);
    switch (step.outcome) {
      case Outcome::Leaf:
        ++stats.leaves;
        finished = std::move(step.results);
        return true;
      case Outcome::Pruned:
        ++stats.pruned;
        finished.clear();
        return true;
      case Outcome::Branch:
        break;
    }
    stack.push_back(Frame{std::move(step.children), 0, depth, {}});
    return false;
  };

  if (visit(root, 0)) return finished;
  while (true) {
    Frame& top = stack.back();
    if (top.next < top.children.size()) {
      Child<Node>& c = top.children[top.next++];
      top.pairs.push_back({std::move(c.ambient), {}});
      Node child = std::move(c.node);
      const std::size_t depth = top.depth + 1;
      if (visit(child, depth)) {
        // `top` may be stale only if visit pushed, which it did not.
        stack.back().pairs.back().members = std::move(finished);
      }
      continue;
    }
    std::vector<Extension> merged = maximal_subset_collation(af, top.pairs, &stats, opts.check_invariants);
    stack.pop_back();
    if (stack.empty()) return merged;
    stack.back().pairs.back().members = std::move(merged);
  }
}

}  // namespace afenum::detail
