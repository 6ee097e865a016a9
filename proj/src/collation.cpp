#include "afenum/collation.hpp"

#include <algorithm>
#include <unordered_set>

#include "afenum/errors.hpp"

namespace afenum {

void RunLimits::check() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw ResourceLimitError("wall-clock budget exhausted");
}

Extension strip_undefendable(const Framework& af, VertexSet s) {
  while (true) {
    const VertexSet defended = attacked_by(af, s);
    VertexSet doomed(af.size());
    s.for_each([&](Vertex v) {
      if (!af.attackers(v).is_subset_of(defended)) doomed.insert(v);
    });
    if (doomed.empty()) return s;
    s -= doomed;
  }
}

Extension unique_max_admissible_of_dag(const Framework& af, const VertexSet& s) {
  af.require_valid(s);
  if (!induces_dag(af, s)) throw PreconditionError("unique_max_admissible_of_dag: the set does not induce a DAG");
  return strip_undefendable(af, s);
}

std::vector<Extension> maximal_subset_collation(const Framework& af, const std::vector<CollationPair>& inputs,
                                                SearchStats* stats, bool check_dag) {
  std::vector<Extension> pool;
  for (const auto& p : inputs) pool.insert(pool.end(), p.members.begin(), p.members.end());
  canonicalize(pool);

  std::unordered_set<VertexSet, VertexSetHash> result(pool.begin(), pool.end());
  std::uint64_t work = 0;
  for (const Extension& u : pool) {
    for (const auto& p : inputs) {
      const VertexSet meet = u & p.ambient;
      if (check_dag && !induces_dag(af, meet))
        throw InternalError("collation: U ∩ S_i is not acyclic; U was not admissible");
      const Extension m = strip_undefendable(af, meet);
      ++work;
      if (!(m == u)) result.erase(m);
    }
  }
  if (stats) stats->collation_work += work;

  std::vector<Extension> out(result.begin(), result.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Extension> inclusion_maximal(std::vector<Extension> sets) {
  canonicalize(sets);
  // Largest first: anything dominated is dominated by a maximal set, and those
  // are all kept by the time smaller sets are examined.
  std::stable_sort(sets.begin(), sets.end(),
                   [](const Extension& a, const Extension& b) { return a.size() > b.size(); });
  std::vector<Extension> out;
  std::vector<std::size_t> sizes;
  for (auto& s : sets) {
    const std::size_t k = s.size();
    bool dominated = false;
    for (std::size_t j = 0; j < out.size() && sizes[j] > k && !dominated; ++j) dominated = s.is_subset_of(out[j]);
    if (!dominated) {
      out.push_back(std::move(s));
      sizes.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace afenum
