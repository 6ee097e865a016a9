#pragma once

#include <optional>
#include <vector>

#include "afenum/framework.hpp"
#include "afenum/search.hpp"

namespace afenum {

namespace detail {
constexpr double oriented_branching_equation(double x) {
  double x8 = x * x;
  x8 *= x8;
  x8 *= x8;
  return 1.0 - 1.0 / x - 1.0 / x8;
}
constexpr double solve_oriented_base() {
  double lo = 1.0, hi = 2.0;  // f(1) < 0 < f(2)
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = (lo + hi) / 2;
    (oriented_branching_equation(mid) < 0 ? lo : hi) = mid;
  }
  return hi;
}
}  // namespace detail

// Positive root of 1 - x^-1 - x^-8, about 1.23205. The oriented enumerator
// visits at most kOrientedBase^n leaves.
inline constexpr double kOrientedBase = detail::solve_oriented_base();

/// Undecided set plus the deferred queue. Deferred vertices attack only
/// vertices queued before them and never anything undecided.
struct OrientedState {
  VertexSet und;
  std::vector<Vertex> def;

  static OrientedState initial(const Framework& af) { return {af.all(), {}}; }
  VertexSet ambient() const;
};

// Moves the lowest vertex with out-degree 0 in G[und] to the back of def.
// Returns false (state untouched) when there is none.
bool simplify_outdeg0(const Framework& af, OrientedState& state);
// For the lowest v with in-degree 0 in G[und]: drop N(v) from und, queue v.
// Returns false (state untouched) when there is none.
bool simplify_indeg0(const Framework& af, OrientedState& state);
// Both rules to a fixpoint, out-degree 0 first. Returns |und| removed.
std::size_t simplify_oriented(const Framework& af, OrientedState& state);

// Throws InternalError naming the first violated state invariant.
void check_oriented_state(const Framework& af, const OrientedState& state);

/// Preferred extensions of an oriented, loop-free framework. Throws
/// PreconditionError otherwise; route such inputs through oriented_translate.
EnumResult oriented_enumerate(const Framework& af, const EnumOptions& opts = {});

/// Recognises G[component] as the circulant F_n (arcs i->i+1 and i->i+2 mod n).
/// On success, element i of the returned vector is the vertex playing i.
/// Returns nullopt if the component has a different shape.
std::optional<std::vector<Vertex>> recognize_Fn(const Framework& af, const VertexSet& component);
inline std::optional<std::vector<Vertex>> recognize_Fn(const Framework& af) { return recognize_Fn(af, af.all()); }

}  // namespace afenum
