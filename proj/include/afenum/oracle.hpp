#pragma once

#include <cstddef>
#include <vector>

#include "afenum/framework.hpp"

namespace afenum {

// Largest framework (or candidate set, for oracle_mase) the oracle accepts.
inline constexpr std::size_t kDefaultOracleLimit = 20;

// Exhaustive enumeration straight from the definitions. Results come out by
// increasing size, then lexicographically. Throws ResourceLimitError above the
// size cap.
std::vector<Extension> oracle_admissible_sets(const Framework& af, std::size_t limit = kDefaultOracleLimit);
std::vector<Extension> oracle_preferred_extensions(const Framework& af, std::size_t limit = kDefaultOracleLimit);

// Admissible T ⊆ s, maximal among admissible subsets of s, with |s \ T| <= k.
// Negative k yields nothing.
std::vector<Extension> oracle_mase(const Framework& af, const VertexSet& s, int k,
                                   std::size_t limit = kDefaultOracleLimit);

}  // namespace afenum
