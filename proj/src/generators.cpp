#include "afenum/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "afenum/errors.hpp"
#include "afenum/translations.hpp"

namespace afenum {
namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return labels;
}

Framework labelled(std::size_t n, const std::vector<Arc>& arcs) { return Framework(default_labels(n), arcs); }

// Appends a copy of `part` shifted by `offset`.
void append(std::vector<Arc>& arcs, const Framework& part, Vertex offset) {
  for (const Arc& a : part.arcs()) arcs.push_back({a.from + offset, a.to + offset});
}

const Framework& translated_triangle() {
  static const Framework t = oriented_translate(bidir_triangles(1)).target;
  return t;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t to_count(const std::string& s, std::string_view what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s.front() == '-') throw InputError("bad " + std::string(what) + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

double to_real(const std::string& s, std::string_view what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !std::isfinite(v)) throw InputError("bad " + std::string(what) + " '" + s + "'");
  return v;
}

void need_unit(double x, std::string_view what) {
  if (x < 0 || x > 1) throw InputError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

Framework bidir_triangles(std::size_t k) {
  std::vector<Arc> arcs;
  for (std::size_t t = 0; t < k; ++t) {
    const auto o = static_cast<Vertex>(3 * t);
    for (Vertex i = 0; i < 3; ++i)
      for (Vertex j = 0; j < 3; ++j)
        if (i != j) arcs.push_back({o + i, o + j});
  }
  return labelled(3 * k, arcs);
}

Framework two_cycles(std::size_t k) {
  std::vector<Arc> arcs;
  for (std::size_t t = 0; t < k; ++t) {
    const auto o = static_cast<Vertex>(2 * t);
    arcs.insert(arcs.end(), {{o, o + 1}, {o + 1, o}});
  }
  return labelled(2 * k, arcs);
}

Framework circulant_Fn(std::size_t n) {
  if (n < 3) throw InputError("F_n needs n >= 3");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 2) % n)});
  }
  return labelled(n, arcs);
}

Framework oriented_triangles(std::size_t k) {
  const Framework& t = translated_triangle();
  std::vector<Arc> arcs;
  for (std::size_t c = 0; c < k; ++c) append(arcs, t, static_cast<Vertex>(c * t.size()));
  return labelled(k * t.size(), arcs);
}

Framework random_digraph(std::size_t n, double arc_prob, double two_cycle_fraction, std::uint64_t seed) {
  need_unit(arc_prob, "arc probability");
  need_unit(two_cycle_fraction, "2-cycle fraction");
  std::mt19937_64 rng(seed);
  std::size_t marked = static_cast<std::size_t>(std::ceil(two_cycle_fraction * static_cast<double>(n) - 1e-9));
  marked = std::min(marked, n);
  if (marked == 1) marked = n >= 2 ? 2 : 0;

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(marked));

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  auto add = [&](Vertex u, Vertex v) { adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1; };
  for (std::size_t i = 0; i + 1 < chosen.size(); i += 2) {
    add(chosen[i], chosen[i + 1]);
    add(chosen[i + 1], chosen[i]);
  }
  if (chosen.size() % 2 == 1) {
    // The odd one out joins a 2-cycle with an already paired vertex.
    const Vertex last = chosen.back();
    std::uniform_int_distribution<std::size_t> pick(0, chosen.size() - 2);
    const Vertex mate = chosen[pick(rng)];
    add(last, mate);
    add(mate, last);
  }

  std::bernoulli_distribution coin(arc_prob), direction(0.5);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adj[u][v] || adj[v][u]) continue;
      if (!coin(rng)) continue;
      if (direction(rng))
        adj[u][v] = 1;
      else
        adj[v][u] = 1;
    }

  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (adj[u][v]) arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  return labelled(n, arcs);
}

Framework lower_bound_instance(std::size_t n, double r) {
  need_unit(r, "r");
  const double dn = static_cast<double>(n);
  const auto triangles = static_cast<std::size_t>(std::floor(r * dn / 3 + 1e-9));
  const auto translated = static_cast<std::size_t>(std::floor((1 - r) * dn / 6 + 1e-9));
  std::vector<Arc> arcs;
  append(arcs, bidir_triangles(triangles), 0);
  const auto base = static_cast<Vertex>(3 * triangles);
  append(arcs, oriented_triangles(translated), base);
  const std::size_t used = 3 * triangles + 6 * translated;
  return labelled(std::max(n, used), arcs);
}

Framework generate(std::string_view recipe, std::uint64_t seed) {
  const auto colon = recipe.find(':');
  if (colon == std::string_view::npos) throw InputError("generator string must look like KIND:PARAMS");
  const std::string kind(recipe.substr(0, colon));
  const std::string rest(recipe.substr(colon + 1));
  if (kind == "fromCnf") {
    std::ifstream in(rest);
    if (!in) throw InputError("cannot open CNF file '" + rest + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return extended_translate(parse_dimacs(ss.str()));
  }
  const auto params = split(rest, ',');
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw InputError(kind + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
  };
  auto single = [&](std::string_view what) {
    arity(1);
    return to_count(params[0], what);
  };
  if (kind == "bidirTriangles") return bidir_triangles(single("k"));
  if (kind == "twoCycles") return two_cycles(single("k"));
  if (kind == "Fn") return circulant_Fn(single("n"));
  if (kind == "orientedTriangle") return oriented_triangles(single("k"));
  if (kind == "randomDigraph") {
    arity(3);
    return random_digraph(to_count(params[0], "n"), to_real(params[1], "arc probability"),
                          to_real(params[2], "2-cycle fraction"), seed);
  }
  if (kind == "lowerBound") {
    arity(2);
    return lower_bound_instance(to_count(params[0], "n"), to_real(params[1], "r"));
  }
  throw InputError("unknown generator '" + kind + "'");
}

}  // namespace afenum
