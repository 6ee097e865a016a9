#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "afenum/vertex_set.hpp"

namespace afenum {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// An argumentation framework: a digraph where arc (u,v) means "u attacks v".
///
/// Immutable after construction. Duplicate arcs are dropped, self-loops are
/// kept. Attackers/targets are stored both as bitsets (for set algebra) and as
/// sorted lists (for iteration).
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  // Throws InputError on an out-of-range endpoint or duplicate label.
  ArgumentationFramework(std::vector<std::string> labels, std::span<const Arc> arcs);
  // Labels default to "1".."n".
  ArgumentationFramework(std::size_t n, std::span<const Arc> arcs);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<Vertex> find(std::string_view label) const;

  // In-neighbours of v.
  const VertexSet& attackers(Vertex v) const { return in_.at(static_cast<std::size_t>(v)); }
  // Out-neighbours of v.
  const VertexSet& targets(Vertex v) const { return out_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& attacker_list(Vertex v) const { return in_list_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& target_list(Vertex v) const { return out_list_.at(static_cast<std::size_t>(v)); }
  bool attacks(Vertex u, Vertex v) const { return targets(u).contains(v); }

  // Vertices on at least one 2-cycle u<->v with u != v.
  const VertexSet& two_cycle_members() const noexcept { return two_cycle_; }
  const VertexSet& self_loopers() const noexcept { return self_loop_; }
  bool has_self_loops() const noexcept { return !self_loop_.empty(); }
  // No 2-cycles (self-loops are not 2-cycles).
  bool is_oriented() const noexcept { return two_cycle_.empty(); }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all() const { return VertexSet::full(size()); }
  VertexSet make_set(std::initializer_list<Vertex> members) const;

  // Throws InputError unless `s` is sized for this framework.
  void require_valid(const VertexSet& s) const;
  void require_valid(Vertex v) const;

 private:
  void build(std::span<const Arc> arcs);

  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> in_, out_;
  std::vector<std::vector<Vertex>> in_list_, out_list_;
  VertexSet two_cycle_, self_loop_;
  std::unordered_map<std::string, Vertex> index_;
};

using Framework = ArgumentationFramework;

bool is_conflict_free(const Framework& af, const Extension& s);
// Every attacker of v is attacked by some member of s.
bool is_acceptable(const Framework& af, Vertex v, const Extension& s);
bool is_admissible(const Framework& af, const Extension& s);

// r(G): number of vertices lying on a 2-cycle.
std::size_t resolution_order(const Framework& af);
// r(G[s]) without materialising the induced subgraph.
std::size_t resolution_order_within(const Framework& af, const VertexSet& s);

// All vertices attacked by some member of s.
VertexSet attacked_by(const Framework& af, const VertexSet& s);

struct SubFramework {
  Framework framework;
  // to_parent[i] is the parent index of local vertex i (ascending).
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local, std::size_t parent_size) const;
  VertexSet project(const VertexSet& parent) const;
};

// G[s], labels preserved, local indices in ascending parent order.
SubFramework induced_subframework(const Framework& af, const VertexSet& s);

// True iff G[s] has no directed cycle (self-loops count as cycles).
bool induces_dag(const Framework& af, const VertexSet& s);

}  // namespace afenum
