#include <doctest.h>

#include <random>

#include "afenum/errors.hpp"
#include "afenum/framework.hpp"
#include "afenum/generators.hpp"
#include "support/helpers.hpp"

using namespace afenum;

namespace {
Framework chain() { return Framework({"a", "b", "c"}, std::vector<Arc>{{0, 1}, {1, 2}}); }
Framework single_arc() { return Framework({"u", "v"}, std::vector<Arc>{{0, 1}}); }
Framework two_cycle() { return Framework({"u", "v"}, std::vector<Arc>{{0, 1}, {1, 0}}); }
Framework directed_triangle() { return Framework(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }
}  // namespace

TEST_CASE("vertex sets behave like sets") {
  VertexSet a(70, {1, 5, 64, 69}), b(70, {5, 64});
  CHECK(a.size() == 4);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a - b) == VertexSet(70, {1, 69}));
  CHECK((a & b) == b);
  CHECK(a.intersection_size(b) == 2);
  CHECK(a.complement().size() == 66);
  CHECK(a.first() == 1);
  CHECK(a.next(5) == 64);
  CHECK(a.next(69) == -1);
  CHECK(VertexSet::full(70).size() == 70);
  std::vector<VertexSet> v{VertexSet(4, {2}), VertexSet(4, {0, 3}), VertexSet(4, {0}), VertexSet(4, {0})};
  canonicalize(v);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == VertexSet(4, {0}));
  CHECK(v[1] == VertexSet(4, {0, 3}));
  CHECK(v[2] == VertexSet(4, {2}));
}

TEST_CASE("framework construction") {
  SUBCASE("duplicate arcs collapse") {
    Framework af(2, std::vector<Arc>{{0, 1}, {0, 1}, {1, 0}});
    CHECK(af.arc_count() == 2);
    CHECK(af.two_cycle_members() == af.all());
  }
  SUBCASE("in and out neighbourhoods are inverse") {
    const Framework af = random_digraph(9, 0.4, 0.3, 3);
    for (const Arc& a : af.arcs()) {
      CHECK(af.targets(a.from).contains(a.to));
      CHECK(af.attackers(a.to).contains(a.from));
    }
    std::size_t out_total = 0, in_total = 0;
    for (Vertex v = 0; v < 9; ++v) {
      out_total += af.targets(v).size();
      in_total += af.attackers(v).size();
    }
    CHECK(out_total == af.arc_count());
    CHECK(in_total == af.arc_count());
  }
  SUBCASE("2-cycle membership is exact") {
    const Framework af = random_digraph(10, 0.5, 0.3, 11);
    for (Vertex v = 0; v < 10; ++v) {
      bool mutual = false;
      for (Vertex u = 0; u < 10; ++u)
        if (u != v && af.attacks(u, v) && af.attacks(v, u)) mutual = true;
      CHECK(af.two_cycle_members().contains(v) == mutual);
    }
  }
  SUBCASE("self-loops are kept and are not 2-cycles") {
    Framework af(2, std::vector<Arc>{{0, 0}, {0, 1}});
    CHECK(af.has_self_loops());
    CHECK(af.self_loopers() == VertexSet(2, {0}));
    CHECK(resolution_order(af) == 0);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(Framework(2, std::vector<Arc>{{0, 2}}), InputError);
    CHECK_THROWS_AS(Framework({"a", "a"}, std::vector<Arc>{}), InputError);
    CHECK_THROWS_AS(is_conflict_free(chain(), VertexSet(5)), InputError);
  }
  SUBCASE("labels") {
    const Framework af = chain();
    CHECK(af.find("b") == 1);
    CHECK_FALSE(af.find("z").has_value());
    CHECK(Framework(3, std::vector<Arc>{}).label(2) == "3");
  }
}

TEST_CASE("conflict-freeness") {
  const Framework af = single_arc();
  CHECK_FALSE(is_conflict_free(af, af.make_set({0, 1})));
  CHECK(is_conflict_free(af, af.make_set({0})));
  CHECK(is_conflict_free(two_cycle(), VertexSet(2)));
  Framework loop(1, std::vector<Arc>{{0, 0}});
  CHECK_FALSE(is_conflict_free(loop, loop.all()));
}

TEST_CASE("acceptability") {
  const Framework c = chain();
  CHECK(is_acceptable(c, 2, c.make_set({0})));
  CHECK_FALSE(is_acceptable(c, 1, c.empty_set()));
  const Framework t = two_cycle();
  CHECK(is_acceptable(t, 0, t.make_set({0})));
}

TEST_CASE("admissibility") {
  const Framework c = chain();
  CHECK(is_admissible(c, c.make_set({0, 2})));
  CHECK_FALSE(is_admissible(c, c.make_set({2})));
  const Framework d = directed_triangle();
  CHECK(is_admissible(d, d.empty_set()));
}

TEST_CASE("resolution order") {
  CHECK(resolution_order(bidir_triangles(1)) == 3);
  CHECK(resolution_order(directed_triangle()) == 0);
  CHECK(resolution_order(Framework(3, std::vector<Arc>{{0, 1}, {1, 0}, {1, 2}})) == 2);
  const Framework af = random_digraph(10, 0.4, 0.5, 5);
  CHECK(resolution_order_within(af, af.all()) == resolution_order(af));
}

TEST_CASE("induced subframework") {
  const Framework c = chain();
  auto sub = induced_subframework(c, c.make_set({0, 2}));
  CHECK(sub.framework.size() == 2);
  CHECK(sub.framework.arc_count() == 0);
  CHECK(sub.framework.labels() == std::vector<std::string>{"a", "c"});
  CHECK(sub.to_parent == std::vector<Vertex>{0, 2});

  const Framework tri = bidir_triangles(1);
  auto pair = induced_subframework(tri, tri.make_set({0, 1}));
  CHECK(pair.framework.arc_count() == 2);
  CHECK(resolution_order(pair.framework) == 2);

  const Framework r = random_digraph(9, 0.4, 0.4, 8);
  auto whole = induced_subframework(r, r.all());
  CHECK(whole.framework.arcs() == r.arcs());
  CHECK(resolution_order(whole.framework) == resolution_order(r));

  auto mid = induced_subframework(r, r.make_set({1, 4, 7}));
  CHECK(mid.lift(mid.framework.all(), r.size()) == r.make_set({1, 4, 7}));
  CHECK(mid.project(r.make_set({4, 5})) == VertexSet(3, {1}));
}

TEST_CASE("DAG detection") {
  CHECK(induces_dag(chain(), chain().all()));
  CHECK_FALSE(induces_dag(directed_triangle(), directed_triangle().all()));
  CHECK(induces_dag(directed_triangle(), VertexSet(3, {0, 1})));
  Framework loop(1, std::vector<Arc>{{0, 0}});
  CHECK_FALSE(induces_dag(loop, loop.all()));
}

TEST_CASE("predicate properties on random frameworks") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Framework af = random_digraph(n, 0.35, (trial % 4) / 3.0, rng());
    const naive::Graph g = testutil::to_naive(af);
    CHECK(is_admissible(af, af.empty_set()));
    for (int k = 0; k < 8; ++k) {
      const VertexSet s = testutil::random_subset(n, rng);
      const auto ns = testutil::to_naive(s);
      CHECK(is_conflict_free(af, s) == naive::conflict_free(g, ns));
      CHECK(is_admissible(af, s) == naive::admissible(g, ns));
      if (is_admissible(af, s)) CHECK(is_conflict_free(af, s));
    }
  }
}
