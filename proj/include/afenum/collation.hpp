#pragma once

#include <vector>

#include "afenum/framework.hpp"
#include "afenum/search.hpp"

namespace afenum {

/// The unique maximal admissible subset of `s`, which must induce a DAG.
///
/// Strips undefendable vertices (those with an attacker no member of `s`
/// counter-attacks) until nothing changes. Throws PreconditionError when G[s]
/// has a cycle.
Extension unique_max_admissible_of_dag(const Framework& af, const VertexSet& s);

// Same fixpoint without the acyclicity check. On a non-DAG the result need not
// be admissible.
Extension strip_undefendable(const Framework& af, VertexSet s);

struct CollationPair {
  VertexSet ambient;                // S_i
  std::vector<Extension> members;   // C_i: maximal admissible subsets of S_i
};

/// Inclusion-maximal elements of the union of all `members`, each once, in
/// canonical order. Every U in the pool knocks out umas(U ∩ S_i) for each i
/// whenever that differs from U.
std::vector<Extension> maximal_subset_collation(const Framework& af, const std::vector<CollationPair>& inputs,
                                                SearchStats* stats = nullptr, bool check_dag = false);

// Reference filter: drop any set strictly contained in another. Quadratic.
std::vector<Extension> inclusion_maximal(std::vector<Extension> sets);

}  // namespace afenum
