#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "afenum/vertex_set.hpp"

namespace afenum {

/// Shape of one branching run. `leaves` counts base-case hits only; nodes cut
/// off before reaching a base case (negative budget, dead ends) are `pruned`.
struct SearchStats {
  std::uint64_t leaves = 0;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t max_depth = 0;
  // Unique-maximal-admissible-subset evaluations spent in collation.
  std::uint64_t collation_work = 0;

  SearchStats& operator+=(const SearchStats& o) {
    leaves += o.leaves;
    nodes += o.nodes;
    pruned += o.pruned;
    max_depth = std::max(max_depth, o.max_depth);
    collation_work += o.collation_work;
    return *this;
  }
};

/// Wall-clock budget shared by every enumerator. Exceeding it throws
/// ResourceLimitError.
struct RunLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static RunLimits within(std::chrono::duration<double> budget) {
    RunLimits l;
    l.deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    return l;
  }
  void check() const;
};

struct EnumOptions {
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
  RunLimits limits;
};

struct EnumResult {
  std::vector<Extension> extensions;  // canonical order
  SearchStats stats;
};

}  // namespace afenum
