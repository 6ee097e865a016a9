#include "afenum/mis.hpp"

#include "afenum/collation.hpp"
#include "afenum/errors.hpp"

namespace afenum {
namespace {

// Past this many distinct sets the quadratic collation dominates the run; the
// candidates are all admissible, so the plain inclusion filter gives the same
// answer.
constexpr std::size_t kCollationCap = 4096;

struct MisSearch {
  const ConflictGraph& g;
  SearchStats& stats;
  const RunLimits& limits;
  std::vector<VertexSet> found;

  VertexSet closed(Vertex v) const {
    VertexSet s = g.adj[static_cast<std::size_t>(v)];
    s.insert(v);
    return s;
  }

  // Bron-Kerbosch without the clique framing: R is independent, P the
  // vertices still addable, X the vertices that would extend R but were
  // already explored in a sibling branch.
  void run(VertexSet& r, VertexSet p, VertexSet x, std::size_t depth) {
    ++stats.nodes;
    if (depth > stats.max_depth) stats.max_depth = depth;
    if ((stats.nodes & 1023u) == 0) limits.check();
    if (p.empty()) {
      if (x.empty()) {
        ++stats.leaves;
        found.push_back(r);
      } else {
        ++stats.pruned;
      }
      return;
    }
    // Pivot minimising |P ∩ N[u]| over P ∪ X. An X vertex with no P neighbour
    // can never be blocked, so the branch is dead.
    Vertex pivot = -1;
    std::size_t best = 0;
    const VertexSet px = p | x;
    for (Vertex u = px.first(); u >= 0; u = px.next(u)) {
      const std::size_t c = closed(u).intersection_size(p);
      if (c == 0) {
        ++stats.pruned;
        return;
      }
      if (pivot < 0 || c < best) {
        pivot = u;
        best = c;
      }
    }
    const VertexSet candidates = closed(pivot) & p;
    candidates.for_each([&](Vertex w) {
      const VertexSet nw = closed(w);
      r.insert(w);
      run(r, p - nw, x - nw, depth + 1);
      r.erase(w);
      p.erase(w);
      x.insert(w);
    });
  }
};

}  // namespace

ConflictGraph symmetrize(const Framework& af) {
  if (af.has_self_loops()) throw PreconditionError("conflict graph needs a loop-free framework; apply loopless_translate");
  ConflictGraph g;
  g.adj.reserve(af.size());
  for (std::size_t v = 0; v < af.size(); ++v)
    g.adj.push_back(af.attackers(static_cast<Vertex>(v)) | af.targets(static_cast<Vertex>(v)));
  return g;
}

std::vector<VertexSet> maximal_independent_sets(const ConflictGraph& g, SearchStats& stats, const RunLimits& limits) {
  const std::size_t n = g.size();
  VertexSet r(n), p(n);
  for (std::size_t v = 0; v < n; ++v) (g.adj[v].empty() ? r : p).insert(static_cast<Vertex>(v));
  MisSearch search{g, stats, limits, {}};
  search.run(r, p, VertexSet(n), 0);
  canonicalize(search.found);
  return std::move(search.found);
}

EnumResult mis_preferred_enumerate(const Framework& af, const EnumOptions& opts) {
  EnumResult result;
  const auto sets = maximal_independent_sets(symmetrize(af), result.stats, opts.limits);
  std::vector<CollationPair> pairs;
  pairs.reserve(sets.size());
  for (const VertexSet& s : sets) pairs.push_back({s, {unique_max_admissible_of_dag(af, s)}});

  if (pairs.size() <= kCollationCap) {
    result.extensions = maximal_subset_collation(af, pairs, &result.stats, opts.check_invariants);
  } else {
    std::vector<Extension> pool;
    pool.reserve(pairs.size());
    for (auto& pr : pairs) pool.push_back(std::move(pr.members.front()));
    result.extensions = inclusion_maximal(std::move(pool));
  }
  return result;
}

}  // namespace afenum
