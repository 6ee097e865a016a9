#include "afenum/afenum.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "afenum/dispatch.hpp"
#include "afenum/errors.hpp"
#include "afenum/formats.hpp"
#include "afenum/generators.hpp"

struct afenum_framework {
  afenum::Framework af;
};

struct afenum_result {
  std::string algorithm;
  std::vector<std::vector<size_t>> members;
  std::vector<std::string> lines;
  afenum_stats stats{};
  std::string json;
};

namespace {

thread_local std::string g_last_error;

afenum_status fail(afenum_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class F>
afenum_status guarded(F&& body) {
  try {
    body();
    return AFENUM_OK;
  } catch (const afenum::InputError& e) {
    return fail(AFENUM_ERR_INPUT, e.what());
  } catch (const afenum::ResourceLimitError& e) {
    return fail(AFENUM_ERR_RESOURCE, e.what());
  } catch (const afenum::PreconditionError& e) {
    return fail(AFENUM_ERR_PRECONDITION, e.what());
  } catch (const afenum::ConsistencyError& e) {
    return fail(AFENUM_ERR_CONSISTENCY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AFENUM_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(AFENUM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AFENUM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

afenum::FileFormat to_format(afenum_format f) {
  switch (f) {
    case AFENUM_FORMAT_APX: return afenum::FileFormat::Apx;
    case AFENUM_FORMAT_TGF: return afenum::FileFormat::Tgf;
    default: throw afenum::InputError("a concrete format (apx or tgf) is required here");
  }
}

afenum::Algorithm to_algorithm(afenum_algorithm a) {
  switch (a) {
    case AFENUM_ALG_AUTO: return afenum::Algorithm::Auto;
    case AFENUM_ALG_ORACLE: return afenum::Algorithm::Oracle;
    case AFENUM_ALG_MIS: return afenum::Algorithm::Mis;
    case AFENUM_ALG_ORIENTED: return afenum::Algorithm::Oriented;
    case AFENUM_ALG_MLS: return afenum::Algorithm::Mls;
    case AFENUM_ALG_MASE2K: return afenum::Algorithm::Mase2k;
  }
  throw afenum::InputError("unknown algorithm code " + std::to_string(static_cast<int>(a)));
}

afenum_status store_framework(afenum::Framework af, afenum_framework** out) {
  *out = new afenum_framework{std::move(af)};
  return AFENUM_OK;
}

}  // namespace

extern "C" {

const char* afenum_version(void) { return "0.1.0"; }

const char* afenum_status_string(afenum_status status) {
  switch (status) {
    case AFENUM_OK: return "ok";
    case AFENUM_ERR_INPUT: return "input error";
    case AFENUM_ERR_RESOURCE: return "resource limit exceeded";
    case AFENUM_ERR_PRECONDITION: return "precondition violated";
    case AFENUM_ERR_CONSISTENCY: return "consistency error";
    case AFENUM_ERR_INTERNAL: return "internal error";
    case AFENUM_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* afenum_last_error(void) { return g_last_error.c_str(); }

void afenum_string_free(char* s) { std::free(s); }

void afenum_options_init(afenum_options* options) {
  if (!options) return;
  options->algorithm = AFENUM_ALG_AUTO;
  options->mls_family = AFENUM_FAMILY_EXHAUSTIVE;
  options->seed = 0;
  options->mls_delta = 0.01;
  options->time_limit_seconds = 0;
  options->max_vertices = 0;
}

afenum_status afenum_algorithm_from_name(const char* name, afenum_algorithm* out) {
  if (!name || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = static_cast<afenum_algorithm>(afenum::parse_algorithm(name)); });
}

afenum_status afenum_framework_parse(const char* text, size_t length, afenum_format format, afenum_framework** out) {
  if (!text || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { store_framework(afenum::parse_framework({text, length}, to_format(format)), out); });
}

afenum_status afenum_framework_load(const char* path, afenum_format format, afenum_framework** out) {
  if (!path || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<afenum::FileFormat> f;
    if (format != AFENUM_FORMAT_AUTO) f = to_format(format);
    store_framework(afenum::load_framework(path, f), out);
  });
}

afenum_status afenum_framework_generate(const char* recipe, uint64_t seed, afenum_framework** out) {
  if (!recipe || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { store_framework(afenum::generate(recipe, seed), out); });
}

void afenum_framework_free(afenum_framework* af) { delete af; }

size_t afenum_framework_size(const afenum_framework* af) { return af ? af->af.size() : 0; }

size_t afenum_framework_arc_count(const afenum_framework* af) { return af ? af->af.arc_count() : 0; }

size_t afenum_framework_resolution_order(const afenum_framework* af) {
  return af ? afenum::resolution_order(af->af) : 0;
}

const char* afenum_framework_label(const afenum_framework* af, size_t v) {
  if (!af || v >= af->af.size()) return nullptr;
  return af->af.labels()[v].c_str();
}

afenum_status afenum_framework_write(const afenum_framework* af, afenum_format format, char** out) {
  if (!af || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto f = to_format(format);
    *out = dup_string(f == afenum::FileFormat::Apx ? afenum::write_apx(af->af) : afenum::write_tgf(af->af));
  });
}

afenum_status afenum_enumerate(const afenum_framework* af, const afenum_options* options, const char* instance,
                               afenum_result** out) {
  if (!af || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  afenum_options opts;
  afenum_options_init(&opts);
  if (options) opts = *options;
  return guarded([&] {
    afenum::RunOptions ro;
    ro.algorithm = to_algorithm(opts.algorithm);
    ro.mls.family = opts.mls_family == AFENUM_FAMILY_RANDOM ? afenum::FamilyKind::Random : afenum::FamilyKind::Exhaustive;
    ro.mls.seed = opts.seed;
    ro.mls.delta = opts.mls_delta;
    if (opts.time_limit_seconds > 0) ro.time_limit_seconds = opts.time_limit_seconds;
    ro.max_vertices = opts.max_vertices;
    const afenum::RunReport rep = afenum::run(af->af, ro, instance ? instance : "");

    auto res = std::make_unique<afenum_result>();
    res->algorithm = std::string(afenum::algorithm_name(rep.used));
    for (const auto& labels : afenum::labelled_extensions(af->af, rep.extensions)) {
      std::vector<size_t> idx;
      idx.reserve(labels.size());
      for (const auto& l : labels) idx.push_back(static_cast<size_t>(*af->af.find(l)));
      res->members.push_back(std::move(idx));
      res->lines.push_back(afenum::format_extension(labels));
    }
    res->stats = {rep.stats.leaves,         rep.stats.nodes,  rep.stats.pruned,  rep.stats.max_depth,
                  rep.stats.collation_work, rep.mase_calls, rep.wall_seconds};
    res->json = afenum::report_json(rep);
    *out = res.release();
  });
}

void afenum_result_free(afenum_result* result) { delete result; }

size_t afenum_result_count(const afenum_result* result) { return result ? result->lines.size() : 0; }

afenum_status afenum_result_extension(const afenum_result* result, size_t i, const size_t** members, size_t* size) {
  if (!result || !members || !size) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  if (i >= result->members.size()) return fail(AFENUM_ERR_ARGUMENT, "extension index out of range");
  *members = result->members[i].data();
  *size = result->members[i].size();
  return AFENUM_OK;
}

const char* afenum_result_extension_string(const afenum_result* result, size_t i) {
  if (!result || i >= result->lines.size()) return nullptr;
  return result->lines[i].c_str();
}

afenum_status afenum_result_stats(const afenum_result* result, afenum_stats* out) {
  if (!result || !out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = result->stats;
  return AFENUM_OK;
}

const char* afenum_result_algorithm(const afenum_result* result) { return result ? result->algorithm.c_str() : nullptr; }

const char* afenum_result_report_json(const afenum_result* result) { return result ? result->json.c_str() : nullptr; }

afenum_status afenum_thresholds_csv(size_t steps, char** out) {
  if (!out) return fail(AFENUM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup_string(afenum::thresholds_csv(steps)); });
}

}  // extern "C"
