#include "afenum/framework.hpp"

#include <algorithm>
#include <string>

#include "afenum/errors.hpp"

namespace afenum {

ArgumentationFramework::ArgumentationFramework(std::vector<std::string> labels, std::span<const Arc> arcs)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], static_cast<Vertex>(i));
    if (!fresh) throw InputError("duplicate argument label '" + labels_[i] + "'");
  }
  build(arcs);
}

ArgumentationFramework::ArgumentationFramework(std::size_t n, std::span<const Arc> arcs) {
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels_.push_back(std::to_string(i + 1));
    index_.emplace(labels_.back(), static_cast<Vertex>(i));
  }
  build(arcs);
}

void ArgumentationFramework::build(std::span<const Arc> arcs) {
  const std::size_t n = labels_.size();
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.to < 0 || static_cast<std::size_t>(a.from) >= n || static_cast<std::size_t>(a.to) >= n)
      throw InputError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") out of range for " +
                       std::to_string(n) + " vertices");
  }
  arcs_.assign(arcs.begin(), arcs.end());
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  in_.assign(n, VertexSet(n));
  out_.assign(n, VertexSet(n));
  in_list_.assign(n, {});
  out_list_.assign(n, {});
  two_cycle_ = VertexSet(n);
  self_loop_ = VertexSet(n);
  for (const Arc& a : arcs_) {
    out_[static_cast<std::size_t>(a.from)].insert(a.to);
    in_[static_cast<std::size_t>(a.to)].insert(a.from);
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_list_[v] = out_[v].members();
    in_list_[v] = in_[v].members();
    const auto vv = static_cast<Vertex>(v);
    if (out_[v].contains(vv)) self_loop_.insert(vv);
    VertexSet mutual = out_[v] & in_[v];
    mutual.erase(vv);
    if (!mutual.empty()) two_cycle_.insert(vv);
  }
}

std::optional<Vertex> ArgumentationFramework::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexSet ArgumentationFramework::make_set(std::initializer_list<Vertex> members) const {
  VertexSet s(size());
  for (Vertex v : members) {
    require_valid(v);
    s.insert(v);
  }
  return s;
}

void ArgumentationFramework::require_valid(const VertexSet& s) const {
  if (s.universe() != size())
    throw InputError("vertex set over " + std::to_string(s.universe()) + " vertices used with a framework of " +
                     std::to_string(size()));
}

void ArgumentationFramework::require_valid(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= size())
    throw InputError("vertex index " + std::to_string(v) + " out of range");
}

bool is_conflict_free(const Framework& af, const Extension& s) {
  af.require_valid(s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && af.targets(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_acceptable(const Framework& af, Vertex v, const Extension& s) {
  af.require_valid(v);
  af.require_valid(s);
  for (Vertex u : af.attacker_list(v))
    if (!af.attackers(u).intersects(s)) return false;
  return true;
}

bool is_admissible(const Framework& af, const Extension& s) {
  if (!is_conflict_free(af, s)) return false;
  const VertexSet defended = attacked_by(af, s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !af.attackers(v).is_subset_of(defended)) ok = false;
  });
  return ok;
}

std::size_t resolution_order(const Framework& af) { return af.two_cycle_members().size(); }

std::size_t resolution_order_within(const Framework& af, const VertexSet& s) {
  std::size_t count = 0;
  s.for_each([&](Vertex v) {
    VertexSet mutual = af.targets(v) & af.attackers(v);
    mutual &= s;
    mutual.erase(v);
    if (!mutual.empty()) ++count;
  });
  return count;
}

VertexSet attacked_by(const Framework& af, const VertexSet& s) {
  VertexSet out(af.size());
  s.for_each([&](Vertex v) { out |= af.targets(v); });
  return out;
}

VertexSet SubFramework::lift(const VertexSet& local, std::size_t parent_size) const {
  VertexSet out(parent_size);
  local.for_each([&](Vertex v) { out.insert(to_parent[static_cast<std::size_t>(v)]); });
  return out;
}

VertexSet SubFramework::project(const VertexSet& parent) const {
  VertexSet out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (parent.contains(to_parent[i])) out.insert(static_cast<Vertex>(i));
  return out;
}

SubFramework induced_subframework(const Framework& af, const VertexSet& s) {
  af.require_valid(s);
  SubFramework sub;
  sub.to_parent = s.members();
  std::vector<Vertex> local(af.size(), -1);
  std::vector<std::string> labels;
  labels.reserve(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
    labels.push_back(af.label(sub.to_parent[i]));
  }
  std::vector<Arc> arcs;
  for (const Arc& a : af.arcs())
    if (s.contains(a.from) && s.contains(a.to))
      arcs.push_back({local[static_cast<std::size_t>(a.from)], local[static_cast<std::size_t>(a.to)]});
  sub.framework = Framework(std::move(labels), arcs);
  return sub;
}

bool induces_dag(const Framework& af, const VertexSet& s) {
  af.require_valid(s);
  // Kahn's algorithm restricted to s.
  std::vector<int> indeg(af.size(), 0);
  std::vector<Vertex> ready;
  s.for_each([&](Vertex v) {
    indeg[static_cast<std::size_t>(v)] = static_cast<int>(af.attackers(v).intersection_size(s));
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  });
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : af.target_list(v))
      if (s.contains(w) && --indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return removed == s.size();
}

}  // namespace afenum
