#pragma once

#include <vector>

#include "afenum/framework.hpp"
#include "afenum/search.hpp"

namespace afenum {

/// Undirected conflict graph: {u,v} is an edge iff u attacks v or v attacks u.
/// Its independent sets are exactly the conflict-free sets.
struct ConflictGraph {
  std::vector<VertexSet> adj;

  std::size_t size() const { return adj.size(); }
  bool edge(Vertex u, Vertex v) const { return adj[static_cast<std::size_t>(u)].contains(v); }
};

// Throws PreconditionError on self-loops.
ConflictGraph symmetrize(const Framework& af);

// Every maximal independent set, in canonical order. Leaves (one per set
// found) are bounded by 3^(n/3); dead ends count as pruned.
std::vector<VertexSet> maximal_independent_sets(const ConflictGraph& g, SearchStats& stats,
                                                const RunLimits& limits = {});

/// Preferred extensions through the maximal independent sets of the
/// conflict graph: each one is shrunk to its unique maximal admissible subset
/// and the results are collated.
EnumResult mis_preferred_enumerate(const Framework& af, const EnumOptions& opts = {});

}  // namespace afenum
