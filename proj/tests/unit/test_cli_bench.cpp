#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "afenum/dispatch.hpp"
#include "afenum/errors.hpp"
#include "afenum/formats.hpp"
#include "afenum/generators.hpp"
#include "afenum/oracle.hpp"
#include "afenum/oriented.hpp"

#include "support/helpers.hpp"

using namespace afenum;

namespace {

// Same graph up to labels and arc order.
bool same_graph(const Framework& a, const Framework& b) {
  if (a.labels() != b.labels()) return false;
  return a.arcs() == b.arcs();
}

// Four decimals, truncated.
std::string four_places(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::floor(x * 1e4) / 1e4);
  return buf;
}

}  // namespace

TEST_CASE("apx parsing") {
  const Framework af = parse_apx("arg(a). arg(b). att(a,b).");
  CHECK(af.size() == 2);
  CHECK(af.arc_count() == 1);
  CHECK(af.attacks(0, 1));

  const Framework late = parse_apx("% leading comment\natt(x,y).\narg(x).\narg(y). % trailing\natt(x,y).\n");
  CHECK(late.size() == 2);
  CHECK(late.arc_count() == 1);

  try {
    parse_apx("arg(a).\natt(a,b).\n");
    FAIL("expected an error");
  } catch (const SemanticError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_apx("att(a,b)."), SemanticError);
  CHECK_THROWS_AS(parse_apx("arg(a)\n"), ParseError);
  CHECK_THROWS_AS(parse_apx("arg(a).\nfoo(a).\n"), ParseError);
  CHECK(parse_apx("arg(a). arg(a). att(a,a). att(a,a).").size() == 1);
  CHECK(parse_apx("arg(a). arg(a). att(a,a). att(a,a).").arc_count() == 1);
}

TEST_CASE("tgf parsing") {
  const Framework af = parse_tgf("1\n2\n#\n1 2\n");
  CHECK(af.size() == 2);
  CHECK(af.arc_count() == 1);
  CHECK(af.attacks(0, 1));
  CHECK(same_graph(af, parse_apx("arg(1). arg(2). att(1,2).")));

  CHECK_THROWS_AS(parse_tgf("1\n#\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_tgf("1\n#\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_tgf("1\n#\n#\n"), ParseError);
}

TEST_CASE("format round trips") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Framework af = random_digraph(1 + trial % 15, 0.3, 0.4, rng());
    CHECK(same_graph(parse_apx(write_apx(af)), af));
    CHECK(same_graph(parse_tgf(write_tgf(af)), af));
  }
  const Framework loop({"x"}, std::vector<Arc>{{0, 0}});
  CHECK(same_graph(parse_apx(write_apx(loop)), loop));
  CHECK(same_graph(parse_tgf(write_tgf(loop)), loop));
}

TEST_CASE("format detection and file loading") {
  CHECK(format_from_path("g.apx") == FileFormat::Apx);
  CHECK(format_from_path("dir/g.tgf") == FileFormat::Tgf);
  CHECK_FALSE(format_from_path("g.txt").has_value());
  CHECK(format_from_name("tgf") == FileFormat::Tgf);
  CHECK_FALSE(format_from_name("xml").has_value());
  CHECK_THROWS_AS(load_framework("/nonexistent/file.apx"), InputError);

  const std::string path = "afenum_unit_tmp.apx";
  {
    std::ofstream out(path);
    out << "arg(p).\narg(q).\natt(q,p).\n";
  }
  const Framework af = load_framework(path);
  CHECK(af.size() == 2);
  CHECK(af.attacks(1, 0));
  std::remove(path.c_str());

  const std::string tgf = "afenum_unit_tmp.tgf";
  {
    std::ofstream out(tgf);
    out << "1 p\n2 q\n#\n2 1\n";
  }
  const Framework t = load_framework(tgf);
  CHECK(t.labels() == std::vector<std::string>{"1", "2"});  // IDs name the arguments
  CHECK(t.attacks(1, 0));
  CHECK_THROWS_AS(load_framework(tgf, FileFormat::Apx), ParseError);
  std::remove(tgf.c_str());
}

TEST_CASE("extension formatting") {
  const Framework af = parse_apx("arg(b). arg(a). arg(c).");
  const auto lines = labelled_extensions(af, {VertexSet(3, {0, 1}), VertexSet(3, {2}), VertexSet(3)});
  REQUIRE(lines.size() == 3);
  CHECK(format_extension(lines[0]) == "{}");
  CHECK(format_extension(lines[1]) == "{c}");
  CHECK(format_extension(lines[2]) == "{a,b}");
}

TEST_CASE("generators") {
  const Framework b2 = generate("bidirTriangles:2");
  CHECK(b2.size() == 6);
  CHECK(testutil::canon(oracle_preferred_extensions(b2)).size() == 9);

  const Framework f5 = generate("Fn:5");
  CHECK(f5.size() == 5);
  CHECK(f5.arc_count() == 10);
  for (Vertex i = 0; i < 5; ++i) {
    CHECK(f5.attacks(i, (i + 1) % 5));
    CHECK(f5.attacks(i, (i + 2) % 5));
  }

  const Framework lb = generate("lowerBound:12,0.5");
  CHECK(lb.size() == 12);
  CHECK(resolution_order(lb) == 6);
  CHECK(testutil::canon(oracle_preferred_extensions(lb)).size() == 27);

  const Framework ot = generate("orientedTriangle:1");
  CHECK(ot.size() == 6);
  CHECK(ot.is_oriented());
  CHECK(testutil::canon(oracle_preferred_extensions(ot)).size() == 3);

  CHECK(generate("twoCycles:3").size() == 6);

  const Framework r1 = generate("randomDigraph:10,0.3,0.5", 5);
  const Framework r2 = generate("randomDigraph:10,0.3,0.5", 5);
  CHECK(r1.arcs() == r2.arcs());
  CHECK(resolution_order(r1) == 5);
  const Framework r3 = random_digraph(9, 0.5, 0.3, 1);
  CHECK(resolution_order(r3) == 3);
  CHECK_FALSE(r3.has_self_loops());

  CHECK_THROWS_AS(generate("nosuch:1"), InputError);
  CHECK_THROWS_AS(generate("Fn:2"), InputError);
  CHECK_THROWS_AS(generate("Fn:x"), InputError);
  CHECK_THROWS_AS(generate("randomDigraph:4,2.0,0.5"), InputError);
  CHECK_THROWS_AS(generate("bidirTriangles"), InputError);
}

TEST_CASE("dispatch choices") {
  CHECK(choose_algorithm(circulant_Fn(6)) == Algorithm::Oriented);
  CHECK(choose_algorithm(two_cycles(4)) == Algorithm::Mis);
  // Three 2-cycles plus two isolated vertices: r = 0.75.
  const Framework mid(8, std::vector<Arc>{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}});
  CHECK(choose_algorithm(mid) == Algorithm::Mls);
  CHECK(parse_algorithm("mase2k") == Algorithm::Mase2k);
  CHECK(algorithm_name(Algorithm::Oriented) == "oriented");
  CHECK_THROWS_AS(parse_algorithm("fastest"), InputError);
}

TEST_CASE("crossovers truncate to the dispatch thresholds") {
  const Crossovers c = crossovers();
  CHECK(four_places(c.oriented_to_mls) == "0.6684");
  CHECK(four_places(c.mls_to_mis) == "0.8004");
  CHECK(kOrientedUpTo <= c.oriented_to_mls);
  CHECK(c.oriented_to_mls < kOrientedUpTo + 1e-4);
  CHECK(kMlsUpTo <= c.mls_to_mis);
  CHECK(c.mls_to_mis < kMlsUpTo + 1e-4);
  CHECK(base_mis() == doctest::Approx(std::cbrt(3.0)));
  CHECK(base_oriented(0) == doctest::Approx(kOrientedBase));
  const double phi = kOrientedBase;
  CHECK(base_oriented(0.3) == doctest::Approx(std::pow(phi, 0.6) * std::pow(phi, 0.7)));

  const std::string csv = thresholds_csv(4);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,base_oriented,base_mls,base_mis");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
  CHECK(csv.find("\n0.5000,") != std::string::npos);
  CHECK_THROWS_AS(thresholds_csv(0), InputError);
}

TEST_CASE("all algorithms agree through run()") {
  std::mt19937_64 rng(61);
  const Algorithm all[] = {Algorithm::Auto, Algorithm::Oracle, Algorithm::Mis, Algorithm::Oriented, Algorithm::Mls,
                           Algorithm::Mase2k};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Arc> arcs;
    const std::size_t n = 1 + trial % 10;
    std::bernoulli_distribution coin(0.25);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (coin(rng)) arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    const Framework af(n, arcs);
    const auto expected = testutil::canon(oracle_preferred_extensions(af));
    for (Algorithm a : all) {
      RunOptions o;
      o.algorithm = a;
      o.enumeration.check_invariants = true;
      const RunReport rep = run(af, o, "t");
      CHECK(rep.extensions == expected);
      CHECK(rep.used != Algorithm::Auto);
    }
  }
}

TEST_CASE("run reports and limits") {
  RunOptions o;
  const RunReport empty = run(Framework(0, std::vector<Arc>{}), o);
  REQUIRE(empty.extensions.size() == 1);
  CHECK(empty.extensions[0].empty());

  const RunReport rep = run(two_cycles(3), o, "twoCycles:3");
  CHECK(rep.used == Algorithm::Mis);
  CHECK(rep.extensions.size() == 8);
  const auto j = nlohmann::json::parse(report_json(rep));
  CHECK(j["instance"] == "twoCycles:3");
  CHECK(j["algorithm"] == "mis");
  CHECK(j["extensions"] == 8);
  CHECK(j["n"] == 6);
  CHECK(j["r"].get<double>() == doctest::Approx(1.0));
  CHECK(report_json(rep).find('\n') == std::string::npos);

  o.algorithm = Algorithm::Oracle;
  CHECK_THROWS_AS(run(bidir_triangles(7), o), ResourceLimitError);
  o.max_vertices = 21;
  CHECK(run(bidir_triangles(7), o).extensions.size() == 2187);

  RunOptions slow;
  slow.algorithm = Algorithm::Mase2k;
  slow.max_vertices = 200;
  slow.time_limit_seconds = 0.05;
  CHECK_THROWS_AS(run(bidir_triangles(30), slow), ResourceLimitError);
}
