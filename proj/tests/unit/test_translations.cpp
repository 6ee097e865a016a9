#include <doctest.h>

#include <random>
#include <set>

#include "afenum/errors.hpp"
#include "afenum/generators.hpp"
#include "afenum/oracle.hpp"
#include "afenum/translations.hpp"
#include "support/helpers.hpp"

using namespace afenum;

namespace {

std::set<std::pair<std::string, std::string>> labelled_arcs(const Framework& af) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Arc& a : af.arcs()) out.emplace(af.label(a.from), af.label(a.to));
  return out;
}

Framework two_cycle() { return Framework({"u", "v"}, std::vector<Arc>{{0, 1}, {1, 0}}); }

}  // namespace

TEST_CASE("loopless translation of the two-vertex example") {
  const Framework src({"v1", "v2"}, std::vector<Arc>{{0, 0}, {0, 1}});
  const auto w = loopless_translate(src);
  CHECK(w.loop_guards_added);
  CHECK(w.target.size() == 5);
  CHECK_FALSE(w.target.has_self_loops());
  const std::set<std::pair<std::string, std::string>> expected{
      {"l1", "l2"}, {"l2", "l3"}, {"l3", "l1"}, {"l1", "v1"}, {"v1", "v2"}};
  CHECK(labelled_arcs(w.target) == expected);
  CHECK(w.role[2] == VertexRole::LoopGuard);
  CHECK(w.origin[2] == -1);
  CHECK(w.origin[1] == 1);
}

TEST_CASE("loopless translation modes") {
  const Framework c({"a", "b"}, std::vector<Arc>{{0, 1}});
  const auto kept = loopless_translate(c);
  CHECK_FALSE(kept.loop_guards_added);
  CHECK(kept.target.size() == 2);
  CHECK(labelled_arcs(kept.target) == labelled_arcs(c));

  const auto forced = loopless_translate(c, LooplessMode::Always);
  CHECK(forced.loop_guards_added);
  CHECK(forced.target.size() == 5);

  const Framework loop(1, std::vector<Arc>{{0, 0}});
  const auto t = loopless_translate(loop);
  CHECK(t.target.size() == 4);
  const auto pref = testutil::canon(oracle_preferred_extensions(t.target));
  REQUIRE(pref.size() == 1);
  CHECK(pref[0].empty());
}

TEST_CASE("loopless translation preserves admissible sets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::vector<Arc> arcs;
    std::bernoulli_distribution coin(0.3);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (coin(rng)) arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    const Framework af(n, arcs);
    const auto w = loopless_translate(af, LooplessMode::Always);
    std::set<std::vector<Vertex>> a, b;
    for (const auto& s : oracle_admissible_sets(af)) a.insert(s.members());
    for (const auto& s : oracle_admissible_sets(w.target)) b.insert(s.members());
    CHECK(a == b);
  }
}

TEST_CASE("oriented translation examples") {
  SUBCASE("bidirectional triangle") {
    const auto w = oriented_translate(bidir_triangles(1));
    CHECK(w.target.size() == 6);
    CHECK(w.target.is_oriented());
    CHECK(testutil::canon(oracle_preferred_extensions(w.target)).size() == 3);
  }
  SUBCASE("oriented input is copied") {
    const Framework c({"a", "b", "c"}, std::vector<Arc>{{0, 1}, {1, 2}});
    const auto w = oriented_translate(c);
    CHECK(w.target.size() == 3);
    CHECK(labelled_arcs(w.target) == labelled_arcs(c));
    for (Vertex d : w.duplicate) CHECK(d == -1);
  }
  SUBCASE("2-cycle becomes a 4-cycle") {
    const auto w = oriented_translate(two_cycle());
    REQUIRE(w.target.size() == 4);
    CHECK(w.target.arc_count() == 4);
    CHECK(w.target.is_oriented());
    const Vertex wu = w.duplicate[0], wv = w.duplicate[1];
    CHECK(w.target.attacks(0, 1));
    CHECK(w.target.attacks(1, wu));
    CHECK(w.target.attacks(wu, wv));
    CHECK(w.target.attacks(wv, 0));
    const auto pref = testutil::canon(oracle_preferred_extensions(w.target));
    REQUIRE(pref.size() == 2);
    CHECK(pref[0] == VertexSet(4, {0, wu}));
    CHECK(pref[1] == VertexSet(4, {1, wv}));
  }
}

TEST_CASE("psi and its inverse") {
  const auto w = oriented_translate(two_cycle());
  const Extension none(2);
  CHECK(apply_psi(w, none).empty());
  CHECK(invert_psi(w, apply_psi(w, none)) == none);
  const Extension u(2, {0});
  CHECK(apply_psi(w, u) == VertexSet(4, {0, w.duplicate[0]}));
  CHECK(invert_psi(w, apply_psi(w, u)) == u);
  CHECK_THROWS_AS(invert_psi(w, VertexSet(4, {0})), ConsistencyError);
  CHECK_THROWS_AS(invert_psi(w, VertexSet(4, {w.duplicate[1]})), ConsistencyError);

  const auto g = oriented_translate(Framework(1, std::vector<Arc>{{0, 0}}));
  CHECK_THROWS_AS(invert_psi(g, VertexSet(g.target.size(), {1})), ConsistencyError);
}

TEST_CASE("oriented translation: vertex-count law, resolution 0, bijection") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::vector<Arc> arcs;
    std::bernoulli_distribution coin(0.25);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (coin(rng) && (a != b || trial % 3 == 0)) arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    const Framework af(n, arcs);
    for (LooplessMode mode : {LooplessMode::OnlyIfLoops, LooplessMode::Always}) {
      const auto w = oriented_translate(af, mode);
      const bool guards = af.has_self_loops() || mode == LooplessMode::Always;
      CHECK(w.target.size() == n + resolution_order(af) + (guards ? 3 : 0));
      CHECK(resolution_order(w.target) == 0);
      CHECK_FALSE(w.target.has_self_loops());
      const auto src = testutil::canon(oracle_preferred_extensions(af));
      const auto dst = testutil::canon(oracle_preferred_extensions(w.target));
      CHECK(src.size() == dst.size());
      std::vector<Extension> mapped;
      for (const auto& s : src) {
        const Extension t = apply_psi(w, s);
        mapped.push_back(t);
        CHECK(invert_psi(w, t) == s);
      }
      canonicalize(mapped);
      CHECK(mapped == dst);
    }
  }
}

TEST_CASE("DIMACS round trip and errors") {
  const CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n");
  CHECK(f.variables == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, -2});
  CHECK(f.clauses[1] == std::vector<int>{2, 3, -1});
  const CnfFormula g = parse_dimacs(write_dimacs(f));
  CHECK(g.variables == f.variables);
  CHECK(g.clauses == f.clauses);

  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
  CnfFormula empty_clause{1, {{}}};
  CHECK_THROWS_AS(empty_clause.validate(), InputError);
}

TEST_CASE("extended translation of (z1 or not z2)") {
  const CnfFormula f{2, {{1, -2}}};
  const Framework af = extended_translate(f);
  CHECK(af.size() == 11);
  const std::set<std::pair<std::string, std::string>> expected{
      {"A0", "A1"}, {"A1", "A2"}, {"A2", "A0"},  {"A0", "z1"}, {"A0", "nz1"}, {"A0", "z2"}, {"A0", "nz2"},
      {"z1", "nz1"}, {"nz1", "z1"}, {"z2", "nz2"}, {"nz2", "z2"}, {"z1", "c1"}, {"nz2", "c1"}, {"z1", "c2"},
      {"nz1", "c2"}, {"z2", "c3"}, {"nz2", "c3"}, {"c1", "phi"}, {"c2", "phi"}, {"c3", "phi"}, {"phi", "A0"}};
  CHECK(labelled_arcs(af) == expected);
  CHECK(testutil::canon(oracle_preferred_extensions(af)).size() == count_models(f));
}

TEST_CASE("extended translation small cases") {
  const CnfFormula free_var{1, {}};
  CHECK(count_models(free_var) == 2);
  CHECK(testutil::canon(oracle_preferred_extensions(extended_translate(free_var))).size() == 2);

  const CnfFormula contradiction{1, {{1}, {-1}}};
  CHECK(count_models(contradiction) == 0);
  const auto pref = testutil::canon(oracle_preferred_extensions(extended_translate(contradiction)));
  REQUIRE(pref.size() == 1);
  CHECK(pref[0].empty());
}

TEST_CASE("model counting agrees with the naive reference") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    CnfFormula f;
    f.variables = 1 + trial % 8;
    std::uniform_int_distribution<int> var(1, f.variables), len(1, 3), nclauses(0, 8);
    std::bernoulli_distribution neg(0.5);
    const int m = nclauses(rng);
    for (int j = 0; j < m; ++j) {
      std::vector<int> c;
      const int l = len(rng);
      for (int i = 0; i < l; ++i) c.push_back(neg(rng) ? -var(rng) : var(rng));
      f.clauses.push_back(c);
    }
    CHECK(count_models(f) == naive::models(f.variables, f.clauses));
  }
}
