#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "afenum/framework.hpp"

namespace afenum {

// Vertices are labelled a1, a2, ... unless noted.

// k disjoint triangles with every edge in both directions: 3^k preferred extensions.
Framework bidir_triangles(std::size_t k);
// k disjoint 2-cycles: 2^k preferred extensions.
Framework two_cycles(std::size_t k);
// F_n: arcs i->i+1 and i->i+2 (mod n). Needs n >= 3.
Framework circulant_Fn(std::size_t n);
// k disjoint copies of the oriented translation of a bidirectional triangle.
Framework oriented_triangles(std::size_t k);
// ceil(f*n) vertices (raised to 2 if exactly one) are paired into 2-cycles;
// every other vertex pair gets one arc of random direction with probability p.
// r(G) equals the number of marked vertices.
Framework random_digraph(std::size_t n, double arc_prob, double two_cycle_fraction, std::uint64_t seed);
// floor(r*n/3) bidirectional triangles, floor((1-r)*n/6) oriented translated
// triangles, and isolated vertices up to n.
Framework lower_bound_instance(std::size_t n, double r);
// Random oriented digraph: each vertex pair gets one arc with probability p.
inline Framework random_oriented(std::size_t n, double arc_prob, std::uint64_t seed) {
  return random_digraph(n, arc_prob, 0.0, seed);
}

/// "KIND:PARAMS" with comma-separated parameters, e.g. "randomDigraph:10,0.3,0.5",
/// "Fn:7", "fromCnf:path/to/f.cnf". Throws InputError on unknown kinds or bad parameters.
Framework generate(std::string_view recipe, std::uint64_t seed = 0);

}  // namespace afenum
