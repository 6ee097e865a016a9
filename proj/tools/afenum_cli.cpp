// afenum: enumerate preferred extensions of an argumentation framework.
//
// Exit status: 0 on success, 1 on bad input or a violated precondition,
// 2 when a vertex cap or the time limit is hit.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "afenum/afenum.h"

namespace {

struct FrameworkDeleter {
  void operator()(afenum_framework* p) const { afenum_framework_free(p); }
};
struct ResultDeleter {
  void operator()(afenum_result* p) const { afenum_result_free(p); }
};
using FrameworkPtr = std::unique_ptr<afenum_framework, FrameworkDeleter>;
using ResultPtr = std::unique_ptr<afenum_result, ResultDeleter>;

int report_failure(afenum_status status) {
  std::cerr << "afenum: " << afenum_status_string(status) << ": " << afenum_last_error() << '\n';
  return status == AFENUM_ERR_RESOURCE ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate the preferred extensions of an argumentation framework."};

  std::string input, format, algorithm = "auto", generate, family = "exhaustive";
  std::uint64_t seed = 0;
  bool count_only = false, stats = false, list = false, thresholds = false;
  std::size_t max_n = 0, threshold_steps = 100;
  double time_limit = 600;

  auto* in_opt = app.add_option("-i,--input", input, "Framework file (.apx or .tgf)");
  app.add_option("-f,--format", format, "Input format; defaults to the file extension")
      ->check(CLI::IsMember({"apx", "tgf"}));
  app.add_option("-a,--algorithm", algorithm, "Enumeration algorithm")
      ->check(CLI::IsMember({"auto", "oracle", "mis", "oriented", "mls", "mase2k"}))
      ->capture_default_str();
  auto* gen_opt = app.add_option("-g,--generate", generate,
                                 "Generate an instance: bidirTriangles:k, twoCycles:k, Fn:n, orientedTriangle:k, "
                                 "randomDigraph:n,p,f, lowerBound:n,r, fromCnf:path");
  app.add_option("-s,--seed", seed, "Seed for random generators and random families")->capture_default_str();
  app.add_option("--mls-family", family, "Set-containing family construction for mls")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  app.add_flag("-c,--count-only", count_only, "Print only the number of preferred extensions");
  app.add_flag("--stats", stats, "Print the run report as one JSON line");
  app.add_flag("-l,--list", list, "List the extensions, one {a,b,...} per line (default output)");
  app.add_flag("--emit-thresholds", thresholds, "Print the algorithm crossover table as CSV and exit");
  app.add_option("--threshold-steps", threshold_steps, "Rows in the threshold table minus one")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-n", max_n, "Vertex cap (0 = per-algorithm default)")->capture_default_str();
  app.add_option("--time-limit", time_limit, "Wall-clock budget in seconds (0 = none)")->capture_default_str();
  in_opt->excludes(gen_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (thresholds) {
    char* csv = nullptr;
    if (const auto st = afenum_thresholds_csv(threshold_steps, &csv); st != AFENUM_OK) return report_failure(st);
    std::cout << csv;
    afenum_string_free(csv);
    return 0;
  }
  if (input.empty() && generate.empty()) {
    std::cerr << "afenum: one of --input or --generate is required\n";
    return 1;
  }

  afenum_framework* raw = nullptr;
  afenum_status st;
  if (!generate.empty()) {
    st = afenum_framework_generate(generate.c_str(), seed, &raw);
  } else {
    const afenum_format fmt = format == "apx"   ? AFENUM_FORMAT_APX
                              : format == "tgf" ? AFENUM_FORMAT_TGF
                                                : AFENUM_FORMAT_AUTO;
    st = afenum_framework_load(input.c_str(), fmt, &raw);
  }
  if (st != AFENUM_OK) return report_failure(st);
  FrameworkPtr af(raw);

  afenum_options opts;
  afenum_options_init(&opts);
  if (const auto s = afenum_algorithm_from_name(algorithm.c_str(), &opts.algorithm); s != AFENUM_OK)
    return report_failure(s);
  opts.mls_family = family == "random" ? AFENUM_FAMILY_RANDOM : AFENUM_FAMILY_EXHAUSTIVE;
  opts.seed = seed;
  opts.time_limit_seconds = time_limit;
  opts.max_vertices = max_n;

  afenum_result* res_raw = nullptr;
  st = afenum_enumerate(af.get(), &opts, generate.empty() ? input.c_str() : generate.c_str(), &res_raw);
  if (st != AFENUM_OK) return report_failure(st);
  ResultPtr res(res_raw);

  if (count_only) std::cout << afenum_result_count(res.get()) << '\n';
  if (list || (!count_only && !stats)) {
    for (std::size_t i = 0; i < afenum_result_count(res.get()); ++i)
      std::cout << afenum_result_extension_string(res.get(), i) << '\n';
  }
  if (stats) std::cout << afenum_result_report_json(res.get()) << '\n';
  return 0;
}
