#pragma once

#include <utility>

#include "afenum/framework.hpp"
#include "afenum/search.hpp"

namespace afenum {

/// A MASE instance: find every maximal admissible T ⊆ s with |s \ T| <= k.
///
/// The measure is μ = k/2 + b/4 with b = r(G[s]); it is kept as the integer
/// 4μ = 2k + b so comparisons stay exact.
struct MaseInstance {
  const Framework* af = nullptr;
  VertexSet s;
  int k = 0;

  MaseInstance(const Framework& framework, VertexSet set, int budget);

  int b() const { return static_cast<int>(resolution_order_within(*af, s)); }
  int mu4() const { return 2 * k + b(); }
  double mu() const { return mu4() / 4.0; }
};

// One application of the Undefendable rule: drops the lowest u ∈ s that has an
// attacker (anywhere in V) which no member of s attacks. Returns the new set
// and the number of vertices removed (0 at the fixpoint, else 1).
std::pair<Extension, int> apply_undefendable(const Framework& af, const Extension& s);

// Branching enumerator with the 2^μ leaf bound.
EnumResult mase_enumerate(const MaseInstance& instance, const EnumOptions& opts = {});

// Arc branching: for the lowest arc u->v in G[s], drop u or drop v. At most
// 2^k leaves.
EnumResult mase_enumerate_2k(const MaseInstance& instance, const EnumOptions& opts = {});

}  // namespace afenum
