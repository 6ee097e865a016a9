#pragma once

// Glue between library types and the naive reference.

#include <random>
#include <set>
#include <vector>

#include "afenum/framework.hpp"
#include "naive.hpp"

namespace testutil {

inline naive::Graph to_naive(const afenum::Framework& af) {
  naive::Graph g;
  g.n = static_cast<int>(af.size());
  for (const auto& a : af.arcs()) g.arcs.emplace_back(a.from, a.to);
  return g;
}

inline naive::Set to_naive(const afenum::VertexSet& s) {
  naive::Set out;
  s.for_each([&](afenum::Vertex v) { out.insert(v); });
  return out;
}

inline std::set<naive::Set> to_naive(const std::vector<afenum::Extension>& exts) {
  std::set<naive::Set> out;
  for (const auto& e : exts) out.insert(to_naive(e));
  return out;
}

inline afenum::Framework from_arcs(std::size_t n, std::vector<afenum::Arc> arcs) {
  return afenum::Framework(n, arcs);
}

// Canonically ordered copy, for comparing against oracle output.
inline std::vector<afenum::Extension> canon(std::vector<afenum::Extension> sets) {
  afenum::canonicalize(sets);
  return sets;
}

// Random subset of the vertices, each kept with probability 1/2.
inline afenum::VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
  afenum::VertexSet s(n);
  std::bernoulli_distribution keep(0.5);
  for (std::size_t v = 0; v < n; ++v)
    if (keep(rng)) s.insert(static_cast<afenum::Vertex>(v));
  return s;
}

}  // namespace testutil
