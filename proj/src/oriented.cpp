#include "afenum/oriented.hpp"

#include <string>

#include "afenum/collation.hpp"
#include "afenum/errors.hpp"
#include "branching.hpp"

namespace afenum {

VertexSet OrientedState::ambient() const {
  VertexSet s = und;
  for (Vertex v : def) s.insert(v);
  return s;
}

bool simplify_outdeg0(const Framework& af, OrientedState& state) {
  for (Vertex v = state.und.first(); v >= 0; v = state.und.next(v)) {
    if (!af.targets(v).intersects(state.und)) {
      state.und.erase(v);
      state.def.push_back(v);
      return true;
    }
  }
  return false;
}

bool simplify_indeg0(const Framework& af, OrientedState& state) {
  for (Vertex v = state.und.first(); v >= 0; v = state.und.next(v)) {
    if (!af.attackers(v).intersects(state.und)) {
      state.und -= af.targets(v);
      state.und.erase(v);
      state.def.push_back(v);
      return true;
    }
  }
  return false;
}

std::size_t simplify_oriented(const Framework& af, OrientedState& state) {
  const std::size_t before = state.und.size();
  while (simplify_outdeg0(af, state) || simplify_indeg0(af, state)) {
  }
  return before - state.und.size();
}

void check_oriented_state(const Framework& af, const OrientedState& state) {
  VertexSet earlier(af.size());
  for (Vertex v : state.def) {
    if (state.und.contains(v)) throw InternalError("oriented state: " + af.label(v) + " is both undecided and deferred");
    if (earlier.contains(v)) throw InternalError("oriented state: " + af.label(v) + " deferred twice");
    if (af.targets(v).intersects(state.und))
      throw InternalError("oriented state: deferred " + af.label(v) + " attacks an undecided vertex");
    earlier.insert(v);
  }
  // Each deferred vertex may only attack vertices queued before it.
  VertexSet later = earlier;
  for (Vertex v : state.def) {
    later.erase(v);
    if (af.targets(v).intersects(later) || af.targets(v).contains(v))
      throw InternalError("oriented state: deferred " + af.label(v) + " attacks a vertex queued after it");
  }
}

std::optional<std::vector<Vertex>> recognize_Fn(const Framework& af, const VertexSet& component) {
  af.require_valid(component);
  const std::size_t n = component.size();
  if (n < 5) return std::nullopt;

  auto in_comp = [&](Vertex v) { return af.attackers(v) & component; };
  const Vertex v0 = component.first();
  const VertexSet first_in = in_comp(v0);
  if (first_in.size() != 2) return std::nullopt;
  const Vertex p = first_in.first(), q = first_in.next(p);
  Vertex v1, v2;
  if (af.attacks(p, q)) {
    v2 = p;
    v1 = q;
  } else if (af.attacks(q, p)) {
    v2 = q;
    v1 = p;
  } else {
    return std::nullopt;
  }

  std::vector<Vertex> seq{v0, v1, v2};
  VertexSet used(af.size(), {v0, v1, v2});
  while (seq.size() < n) {
    const VertexSet fresh = in_comp(seq[seq.size() - 2]) - used;
    if (fresh.size() != 1) break;
    seq.push_back(fresh.first());
    used.insert(seq.back());
  }
  if (seq.size() != n) return std::nullopt;

  // v_i plays (-i mod n).
  std::vector<Vertex> order(n);
  std::vector<std::size_t> index(af.size());
  for (std::size_t i = 0; i < n; ++i) {
    order[(n - i) % n] = seq[i];
    index[static_cast<std::size_t>(seq[i])] = (n - i) % n;
  }
  for (Vertex u : seq) {
    const std::size_t j = index[static_cast<std::size_t>(u)];
    const VertexSet expected(af.size(), {order[(j + 1) % n], order[(j + 2) % n]});
    if (!((af.targets(u) & component) == expected)) return std::nullopt;
  }
  return order;
}

namespace {

struct Node {
  OrientedState state;
  std::size_t parent_mu = 0;
  std::size_t promised = 0;  // least |und| decrease the rule guarantees
  const char* rule = nullptr;
};

struct Degrees {
  VertexSet in, out;
  std::size_t indeg() const { return in.size(); }
  std::size_t outdeg() const { return out.size(); }
  std::size_t deg() const { return in.size() + out.size(); }
};

// Weakly connected component of G[und] containing v.
VertexSet component_of(const Framework& af, const VertexSet& und, Vertex v) {
  VertexSet comp(af.size()), frontier(af.size(), {v});
  while (!frontier.empty()) {
    comp |= frontier;
    VertexSet next(af.size());
    frontier.for_each([&](Vertex x) {
      next |= af.targets(x);
      next |= af.attackers(x);
    });
    next &= und;
    next -= comp;
    frontier = std::move(next);
  }
  return comp;
}

OrientedState include(const Framework& af, const OrientedState& s, Vertex v) {
  OrientedState out = s;
  out.und -= af.targets(v);
  out.und -= af.attackers(v);
  out.und.erase(v);
  out.def.push_back(v);
  return out;
}

OrientedState exclude(const OrientedState& s, std::initializer_list<Vertex> vs) {
  OrientedState out = s;
  for (Vertex v : vs) out.und.erase(v);
  return out;
}

}  // namespace

EnumResult oriented_enumerate(const Framework& af, const EnumOptions& opts) {
  if (af.has_self_loops()) throw PreconditionError("oriented enumeration needs a loop-free framework");
  if (!af.is_oriented())
    throw PreconditionError("oriented enumeration needs a framework without 2-cycles; apply oriented_translate first");

  using Step = detail::Step<Node>;
  using Child = detail::Child<Node>;

  auto expand = [&](Node& node, std::size_t) -> Step {
    OrientedState& st = node.state;
    simplify_oriented(af, st);
    // Rules that delete vertices outright jump back here.
  again:
    {
      if (opts.check_invariants) check_oriented_state(af, st);
      const std::size_t mu = st.und.size();
      if (opts.check_invariants && node.rule && node.parent_mu - mu < node.promised)
        throw InternalError(std::string("oriented ") + node.rule + ": |und| fell by " +
                            std::to_string(node.parent_mu - mu) + ", promised " + std::to_string(node.promised));
      node.rule = nullptr;  // later deletions only shrink und further

      if (st.und.empty()) {
        VertexSet d(af.size());
        for (Vertex v : st.def) d.insert(v);
        return Step::leaf({unique_max_admissible_of_dag(af, d)});
      }

      std::vector<Degrees> deg(af.size());
      st.und.for_each([&](Vertex v) {
        deg[static_cast<std::size_t>(v)] = {af.attackers(v) & st.und, af.targets(v) & st.und};
      });
      auto D = [&](Vertex v) -> const Degrees& { return deg[static_cast<std::size_t>(v)]; };

      std::vector<Child> kids;
      auto add = [&](OrientedState s, std::size_t promised, const char* rule) {
        VertexSet amb = s.ambient();
        kids.push_back({Node{std::move(s), mu, promised, rule}, std::move(amb)});
      };
      auto branch_on = [&](Vertex v, std::size_t inc, std::size_t exc, const char* rule) {
        add(include(af, st, v), inc, rule);
        add(exclude(st, {v}), exc, rule);
        return Step::branch(std::move(kids));
      };

      // Case 1: total degree at least 7.
      for (Vertex v = st.und.first(); v >= 0; v = st.und.next(v))
        if (D(v).deg() >= 7) return branch_on(v, D(v).deg() + 1, 1, "case 1");

      // Case 2: in-degree 1.
      for (Vertex v = st.und.first(); v >= 0; v = st.und.next(v)) {
        if (D(v).indeg() != 1) continue;
        const Vertex a = D(v).in.first();
        const Vertex b = D(v).out.first();
        if (D(a).deg() >= 3 || D(v).deg() >= 3) return branch_on(a, D(a).deg() + 1, D(v).deg() + 1, "case 2.1");
        if (D(b).deg() >= 3) return branch_on(b, D(b).deg() + 1, 3, "case 2.2");
        const Vertex w = D(b).out.first();
        if (w == a) {
          // a -> v -> b -> a with nothing attached: an isolated odd cycle.
          st.und.erase(a);
          st.und.erase(v);
          st.und.erase(b);
          simplify_oriented(af, st);
          goto again;
        }
        return branch_on(a, 4, 3, "case 2.3");
      }

      // Case 3: more targets than attackers.
      for (Vertex v = st.und.first(); v >= 0; v = st.und.next(v)) {
        if (D(v).outdeg() <= D(v).indeg()) continue;
        const Vertex a = D(v).in.first(), b = D(v).in.next(a);
        if (D(a).deg() == 3 || D(b).deg() == 3) return branch_on(v, D(v).deg() + 1, 2, "case 3.1");
        add(include(af, st, a), 5, "case 3.2");
        add(include(af, st, b), 5, "case 3.2");
        add(exclude(st, {a, b}), 6, "case 3.2");
        return Step::branch(std::move(kids));
      }

      // Every vertex is now (2,2) or (3,3).
      std::vector<VertexSet> comps;
      {
        VertexSet seen(af.size());
        for (Vertex r = st.und.first(); r >= 0; r = st.und.next(r)) {
          if (seen.contains(r)) continue;
          comps.push_back(component_of(af, st.und, r));
          seen |= comps.back();
        }
      }
      auto regular = [&](const VertexSet& comp, std::size_t d) {
        bool all = true;
        comp.for_each([&](Vertex x) { all = all && D(x).indeg() == d; });
        return all;
      };

      // Case 4: a component of (2,2) vertices.
      for (const VertexSet& comp : comps) {
        if (!regular(comp, 2)) continue;
        for (Vertex v = comp.first(); v >= 0; v = comp.next(v)) {
          const Vertex a = D(v).in.first(), b = D(v).in.next(a);
          if (af.attacks(a, b) || af.attacks(b, a)) continue;
          add(include(af, st, a), 5, "case 4.1");
          OrientedState s2 = include(af, st, b);
          s2.und.erase(a);
          add(std::move(s2), 6, "case 4.1");
          add(exclude(st, {a, b}), 5, "case 4.1");
          return Step::branch(std::move(kids));
        }
        const auto order = recognize_Fn(af, comp);
        if (!order) throw InternalError("oriented case 4.2: (2,2) component is not F_n");
        const std::size_t n = order->size();
        if (n % 3 != 0) {
          // F_n with 3 not dividing n admits only the empty set.
          st.und -= comp;
          simplify_oriented(af, st);
          goto again;
        }
        const Vertex v0 = (*order)[0], v1 = (*order)[n - 1];
        add(include(af, st, v0), n, "case 4.2");
        add(include(af, st, v1), n, "case 4.2");
        add(exclude(st, {v0, v1}), n, "case 4.2");
        return Step::branch(std::move(kids));
      }

      // Case 5: a component of (3,3) vertices.
      for (const VertexSet& comp : comps) {
        if (!regular(comp, 3)) continue;
        const Vertex v = comp.first();
        const Vertex a = D(v).in.first(), b = D(v).in.next(a), c = D(v).in.next(b);
        add(include(af, st, a), 7, "case 5");
        add(include(af, st, b), 7, "case 5");
        add(include(af, st, c), 7, "case 5");
        add(exclude(st, {a, b, c}), 7, "case 5");
        return Step::branch(std::move(kids));
      }

      // Case 6: a (2,2) vertex with a (3,3) attacker.
      for (Vertex v = st.und.first(); v >= 0; v = st.und.next(v)) {
        if (D(v).indeg() != 2) continue;
        const Vertex p = D(v).in.first(), q = D(v).in.next(p);
        const bool p3 = D(p).indeg() == 3, q3 = D(q).indeg() == 3;
        if (!p3 && !q3) continue;
        const Vertex a = p3 ? p : q, b = p3 ? q : p;
        add(include(af, st, a), 7, "case 6");
        add(include(af, st, b), 5, "case 6");
        add(exclude(st, {a, b}), 5, "case 6");
        return Step::branch(std::move(kids));
      }
      throw InternalError("oriented enumeration: no rule applies");
    }
  };

  EnumResult result;
  result.extensions =
      detail::run_branching(af, Node{OrientedState::initial(af), 0, 0, nullptr}, expand, result.stats, opts);
  return result;
}

}  // namespace afenum
