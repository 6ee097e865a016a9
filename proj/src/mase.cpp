#include "afenum/mase.hpp"

#include <string>

#include "afenum/collation.hpp"
#include "afenum/errors.hpp"
#include "branching.hpp"

namespace afenum {
namespace {

struct Node {
  VertexSet s;
  int k = 0;
  // Set on branch children: the parent's 4μ and the least decrease the
  // branching rule promises for this child.
  int parent_mu4 = -1;
  int promised = 0;
  const char* rule = "";
};

// Neighbourhoods inside G[s].
struct Local {
  VertexSet in, out, nbr;
  int indeg() const { return static_cast<int>(in.size()); }
  int outdeg() const { return static_cast<int>(out.size()); }
  int deg() const { return static_cast<int>(nbr.size()); }
};

Local local(const Framework& af, const VertexSet& s, Vertex v) {
  Local l{af.attackers(v) & s, af.targets(v) & s, {}};
  l.nbr = l.in | l.out;
  l.nbr.erase(v);
  return l;
}

int mu4_of(const Framework& af, const VertexSet& s, int k) {
  return 2 * k + static_cast<int>(resolution_order_within(af, s));
}

// Drops self-loopers and undefendable vertices; returns the number removed.
int simplify(const Framework& af, VertexSet& s) {
  const auto before = s.size();
  s -= af.self_loopers();
  s = strip_undefendable(af, std::move(s));
  return static_cast<int>(before - s.size());
}

Node child(VertexSet s, int k, int parent_mu4, int promised, const char* rule) {
  return Node{std::move(s), k, parent_mu4, promised, rule};
}

}  // namespace

MaseInstance::MaseInstance(const Framework& framework, VertexSet set, int budget)
    : af(&framework), s(std::move(set)), k(budget) {
  framework.require_valid(s);
}

std::pair<Extension, int> apply_undefendable(const Framework& af, const Extension& s) {
  af.require_valid(s);
  const VertexSet defended = attacked_by(af, s);
  for (Vertex u = s.first(); u >= 0; u = s.next(u)) {
    if (!af.attackers(u).is_subset_of(defended)) {
      Extension out = s;
      out.erase(u);
      return {std::move(out), 1};
    }
  }
  return {s, 0};
}

EnumResult mase_enumerate(const MaseInstance& instance, const EnumOptions& opts) {
  const Framework& af = *instance.af;
  using Step = detail::Step<Node>;
  using Child = detail::Child<Node>;

  auto expand = [&](Node& node, std::size_t) -> Step {
    if (node.k < 0) return Step::pruned();
    node.k -= simplify(af, node.s);
    if (node.k < 0) return Step::pruned();

    const VertexSet& s = node.s;
    const int mu4 = mu4_of(af, s, node.k);
    if (opts.check_invariants && node.parent_mu4 >= 0 && node.parent_mu4 - mu4 < node.promised)
      throw InternalError(std::string("MASE ") + node.rule + ": measure fell by " +
                          std::to_string(node.parent_mu4 - mu4) + "/4, promised " + std::to_string(node.promised) +
                          "/4");

    if (is_conflict_free(af, s)) return Step::leaf({unique_max_admissible_of_dag(af, s)});

    // Two children: v joins (its neighbours leave), or v leaves.
    auto include_exclude = [&](Vertex v, const Local& lv, int inc, int exc, const char* rule) {
      std::vector<Child> kids;
      kids.push_back({child(s - lv.nbr, node.k - lv.deg(), mu4, inc, rule), s - lv.nbr});
      VertexSet without = s;
      without.erase(v);
      kids.push_back({child(without, node.k - 1, mu4, exc, rule), without});
      return Step::branch(std::move(kids));
    };

    const VertexSet cyc = s & af.two_cycle_members();
    VertexSet b_members(af.size());
    int max_deg = 0;
    Vertex first_nonisolated = -1, first_deg4 = -1;
    for (Vertex v = s.first(); v >= 0; v = s.next(v)) {
      const Local lv = local(af, s, v);
      if (lv.deg() > 0 && first_nonisolated < 0) first_nonisolated = v;
      if (lv.deg() >= 4 && first_deg4 < 0) first_deg4 = v;
      if (lv.deg() > max_deg) max_deg = lv.deg();
      if (cyc.contains(v) && lv.in.intersects(lv.out)) b_members.insert(v);
    }

    if (b_members.empty() && max_deg <= 2) {
      const Vertex v = first_nonisolated;
      return include_exclude(v, local(af, s, v), 4, 4, "case 1");
    }

    if (!b_members.empty()) {
      const Vertex x = b_members.first();
      const Local lx = local(af, s, x);
      const Vertex y = (lx.in & lx.out).first();
      const Local ly = local(af, s, y);
      if (lx.deg() == 1 && ly.deg() == 1) {
        // {x,y} is an isolated 2-cycle: keep exactly one endpoint.
        VertexSet keep_x = s, keep_y = s;
        keep_x.erase(y);
        keep_y.erase(x);
        std::vector<Child> kids;
        kids.push_back({child(keep_x, node.k - 1, mu4, 4, "case 2 (isolated)"), keep_x});
        kids.push_back({child(keep_y, node.k - 1, mu4, 4, "case 2 (isolated)"), keep_y});
        return Step::branch(std::move(kids));
      }
      const bool pick_y = ly.deg() > lx.deg();
      return include_exclude(pick_y ? y : x, pick_y ? ly : lx, 6, 3, "case 2");
    }

    if (first_deg4 >= 0) return include_exclude(first_deg4, local(af, s, first_deg4), 8, 2, "case 3");

    // Max degree 3 and oriented: some vertex has in-degree 1, out-degree 2.
    for (Vertex v = s.first(); v >= 0; v = s.next(v)) {
      const Local lv = local(af, s, v);
      if (lv.indeg() == 1 && lv.outdeg() == 2) {
        const Vertex u = lv.in.first();
        return include_exclude(u, local(af, s, u), 4, 6, "case 4");
      }
    }
    throw InternalError("MASE: no branching rule applies to a non-conflict-free set");
  };

  EnumResult result;
  result.extensions =
      detail::run_branching(af, Node{instance.s, instance.k}, expand, result.stats, opts);
  return result;
}

EnumResult mase_enumerate_2k(const MaseInstance& instance, const EnumOptions& opts) {
  const Framework& af = *instance.af;
  using Step = detail::Step<Node>;
  using Child = detail::Child<Node>;

  auto expand = [&](Node& node, std::size_t) -> Step {
    while (node.k >= 0) {
      const Vertex loop = (node.s & af.self_loopers()).first();
      if (loop < 0) break;
      node.s.erase(loop);
      --node.k;
    }
    if (node.k < 0) return Step::pruned();
    const VertexSet& s = node.s;
    for (Vertex u = s.first(); u >= 0; u = s.next(u)) {
      const Vertex v = (af.targets(u) & s).first();
      if (v < 0) continue;
      VertexSet drop_u = s, drop_v = s;
      drop_u.erase(u);
      drop_v.erase(v);
      std::vector<Child> kids;
      kids.push_back({Node{drop_u, node.k - 1}, drop_u});
      kids.push_back({Node{drop_v, node.k - 1}, drop_v});
      return Step::branch(std::move(kids));
    }
    Extension t = unique_max_admissible_of_dag(af, s);
    if (static_cast<int>(s.size() - t.size()) > node.k) return Step::pruned();
    return Step::leaf({std::move(t)});
  };

  EnumResult result;
  result.extensions =
      detail::run_branching(af, Node{instance.s, instance.k}, expand, result.stats, opts);
  return result;
}

}  // namespace afenum
