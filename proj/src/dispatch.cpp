#include "afenum/dispatch.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "afenum/errors.hpp"
#include "afenum/mase.hpp"
#include "afenum/mis.hpp"
#include "afenum/oracle.hpp"
#include "afenum/oriented.hpp"
#include "afenum/translations.hpp"

namespace afenum {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Mis: return "mis";
    case Algorithm::Oriented: return "oriented";
    case Algorithm::Mls: return "mls";
    case Algorithm::Mase2k: return "mase2k";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Auto, Algorithm::Oracle, Algorithm::Mis, Algorithm::Oriented, Algorithm::Mls,
                      Algorithm::Mase2k})
    if (algorithm_name(a) == name) return a;
  throw InputError("unknown algorithm '" + std::string(name) + "'");
}

double base_oriented(double r) { return std::pow(kOrientedBase, 1 + r); }

double base_mls(double r) {
  const double with_cycles = 1 + std::pow(2.0, 0.25) - std::pow(2.0, -0.5);
  const double without = 2 - std::pow(2.0, -0.5);
  return std::pow(with_cycles, r) * std::pow(without, 1 - r);
}

double base_mis() { return std::cbrt(3.0); }

namespace {
template <class F>
double bisect(F f, double lo, double hi) {
  const bool rising = f(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    ((f(mid) < 0) == rising ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}
}  // namespace

Crossovers crossovers() {
  return {bisect([](double r) { return base_oriented(r) - base_mls(r); }, 0.0, 1.0),
          bisect([](double r) { return base_mls(r) - base_mis(); }, 0.0, 1.0)};
}

std::string thresholds_csv(std::size_t steps) {
  if (steps == 0) throw InputError("thresholds need at least one step");
  std::ostringstream out;
  out << "r,base_oriented,base_mls,base_mis\n" << std::fixed;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(steps);
    out << std::setprecision(4) << r << ',' << std::setprecision(6) << base_oriented(r) << ',' << base_mls(r) << ','
        << base_mis() << '\n';
  }
  return out.str();
}

Algorithm choose_algorithm(const Framework& af) {
  if (af.size() == 0) return Algorithm::Mis;
  const double r = static_cast<double>(resolution_order(af)) / static_cast<double>(af.size());
  if (r < kOrientedUpTo) return Algorithm::Oriented;
  if (r <= kMlsUpTo) return Algorithm::Mls;
  return Algorithm::Mis;
}

std::size_t default_max_vertices(Algorithm a) {
  switch (a) {
    case Algorithm::Oracle: return kDefaultOracleLimit;
    case Algorithm::Mase2k: return 40;
    case Algorithm::Mls: return 40;
    case Algorithm::Mis: return 90;
    case Algorithm::Oriented: return 200;
    case Algorithm::Auto: break;
  }
  return 200;
}

namespace {

// Runs `enumerate` on the loop-free version of af and maps the answers back.
template <class F>
std::vector<Extension> without_loops(const Framework& af, F&& enumerate) {
  if (!af.has_self_loops()) return enumerate(af);
  const TranslationWitness w = loopless_translate(af);
  std::vector<Extension> out;
  for (const Extension& t : enumerate(w.target)) out.push_back(invert_psi(w, t));
  canonicalize(out);
  return out;
}

}  // namespace

RunReport run(const Framework& af, const RunOptions& options, std::string instance) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.instance = std::move(instance);
  rep.requested = options.algorithm;
  rep.vertices = af.size();
  rep.arcs = af.arc_count();
  rep.resolution = resolution_order(af);
  rep.r_fraction = af.size() ? static_cast<double>(rep.resolution) / static_cast<double>(af.size()) : 0.0;
  rep.used = options.algorithm == Algorithm::Auto ? choose_algorithm(af) : options.algorithm;

  const std::size_t cap = options.max_vertices ? options.max_vertices : default_max_vertices(rep.used);
  if (af.size() > cap)
    throw ResourceLimitError(std::string(algorithm_name(rep.used)) + " is capped at " + std::to_string(cap) +
                             " vertices, got " + std::to_string(af.size()));

  EnumOptions eo = options.enumeration;
  if (options.time_limit_seconds) eo.limits = RunLimits::within(std::chrono::duration<double>(*options.time_limit_seconds));

  if (af.size() == 0) {
    rep.extensions = {Extension(0)};
  } else {
    switch (rep.used) {
      case Algorithm::Oracle:
        rep.extensions = oracle_preferred_extensions(af, cap);
        canonicalize(rep.extensions);
        break;
      case Algorithm::Mis:
        rep.extensions = without_loops(af, [&](const Framework& g) {
          EnumResult r = mis_preferred_enumerate(g, eo);
          rep.stats += r.stats;
          return r.extensions;
        });
        break;
      case Algorithm::Mls:
        rep.extensions = without_loops(af, [&](const Framework& g) {
          MlsResult r = mls_enumerate(g, options.mls, eo);
          rep.stats += r.stats;
          rep.mase_calls += r.mase_calls;
          rep.probabilistic = rep.probabilistic || r.probabilistic;
          return r.extensions;
        });
        break;
      case Algorithm::Mase2k:
        rep.extensions = without_loops(af, [&](const Framework& g) {
          EnumResult r = mase_enumerate_2k(MaseInstance(g, g.all(), static_cast<int>(g.size())), eo);
          rep.stats += r.stats;
          rep.mase_calls += 1;
          return r.extensions;
        });
        break;
      case Algorithm::Oriented: {
        const TranslationWitness w = oriented_translate(af);
        EnumResult r = oriented_enumerate(w.target, eo);
        rep.stats += r.stats;
        for (const Extension& t : r.extensions) rep.extensions.push_back(invert_psi(w, t));
        canonicalize(rep.extensions);
        break;
      }
      case Algorithm::Auto:
        throw InternalError("auto mode did not resolve to an algorithm");
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string report_json(const RunReport& rep) {
  nlohmann::ordered_json j;
  j["instance"] = rep.instance;
  j["algorithm"] = algorithm_name(rep.used);
  j["requested"] = algorithm_name(rep.requested);
  j["n"] = rep.vertices;
  j["arcs"] = rep.arcs;
  j["resolution_order"] = rep.resolution;
  j["r"] = rep.r_fraction;
  j["extensions"] = rep.extensions.size();
  j["leaves"] = rep.stats.leaves;
  j["nodes"] = rep.stats.nodes;
  j["pruned"] = rep.stats.pruned;
  j["max_depth"] = rep.stats.max_depth;
  j["collation_work"] = rep.stats.collation_work;
  j["mase_calls"] = rep.mase_calls;
  j["probabilistic"] = rep.probabilistic;
  j["wall_time_s"] = rep.wall_seconds;
  return j.dump();
}

}  // namespace afenum
