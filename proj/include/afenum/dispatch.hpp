#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afenum/framework.hpp"
#include "afenum/mls.hpp"
#include "afenum/search.hpp"

namespace afenum {

enum class Algorithm { Auto, Oracle, Mis, Oriented, Mls, Mase2k };

std::string_view algorithm_name(Algorithm a);
// Throws InputError for an unknown name.
Algorithm parse_algorithm(std::string_view name);

// r = r(G)/n below this: oriented translation + oriented branching.
inline constexpr double kOrientedUpTo = 0.6684;
// r above this: maximal independent sets. Between the two: local search.
inline constexpr double kMlsUpTo = 0.8004;

// Exponential bases per vertex as functions of r = r(G)/n.
double base_oriented(double r);
double base_mls(double r);
double base_mis();

struct Crossovers {
  double oriented_to_mls;
  double mls_to_mis;
};
// Solved by bisection on the curves above.
Crossovers crossovers();

// r, base_oriented, base_mls, base_mis for r = 0, 1/steps, ..., 1.
std::string thresholds_csv(std::size_t steps = 100);

// Algorithm auto mode picks for this framework (never Auto).
Algorithm choose_algorithm(const Framework& af);

// Largest framework each algorithm accepts unless overridden.
std::size_t default_max_vertices(Algorithm a);

struct RunOptions {
  Algorithm algorithm = Algorithm::Auto;
  MlsOptions mls;
  std::optional<double> time_limit_seconds;
  // 0 means default_max_vertices(algorithm actually run).
  std::size_t max_vertices = 0;
  EnumOptions enumeration;
};

struct RunReport {
  std::string instance;
  Algorithm requested = Algorithm::Auto;
  Algorithm used = Algorithm::Auto;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::size_t resolution = 0;  // r(G)
  double r_fraction = 0;
  std::vector<Extension> extensions;  // preferred extensions, canonical order
  SearchStats stats;
  std::uint64_t mase_calls = 0;
  bool probabilistic = false;
  double wall_seconds = 0;
};

/// Enumerates the preferred extensions with the requested (or auto-selected)
/// algorithm. Inputs with self-loops or 2-cycles are translated first where
/// the algorithm needs it, and results are mapped back. Throws
/// ResourceLimitError when a size cap or the time limit is exceeded.
RunReport run(const Framework& af, const RunOptions& options, std::string instance = {});

// One-line JSON object (no trailing newline).
std::string report_json(const RunReport& report);

}  // namespace afenum
