/*
 * C interface to the preferred-extension enumerators.
 *
 * Every function that can fail returns an afenum_status; on failure the
 * message is available from afenum_last_error() on the same thread until the
 * next failing call. Objects returned through out-parameters belong to the
 * caller and are released with the matching *_free function. Strings returned
 * as `const char*` stay owned by the object they came from.
 */
#ifndef AFENUM_AFENUM_H
#define AFENUM_AFENUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(AFENUM_BUILDING_LIBRARY)
#    define AFENUM_API __declspec(dllexport)
#  else
#    define AFENUM_API __declspec(dllimport)
#  endif
#else
#  define AFENUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct afenum_framework afenum_framework;
typedef struct afenum_result afenum_result;

typedef enum afenum_status {
  AFENUM_OK = 0,
  AFENUM_ERR_INPUT = 1,        /* unreadable file, parse error, bad generator or parameter */
  AFENUM_ERR_RESOURCE = 2,     /* vertex cap or time limit exceeded */
  AFENUM_ERR_PRECONDITION = 3, /* algorithm applied outside its domain */
  AFENUM_ERR_CONSISTENCY = 4,  /* a translated extension failed to map back */
  AFENUM_ERR_INTERNAL = 5,     /* a runtime self-check failed */
  AFENUM_ERR_ARGUMENT = 6      /* null pointer or index out of range */
} afenum_status;

typedef enum afenum_format {
  AFENUM_FORMAT_AUTO = 0, /* from the file extension; only valid for afenum_framework_load */
  AFENUM_FORMAT_APX = 1,
  AFENUM_FORMAT_TGF = 2
} afenum_format;

typedef enum afenum_algorithm {
  AFENUM_ALG_AUTO = 0,
  AFENUM_ALG_ORACLE = 1,
  AFENUM_ALG_MIS = 2,
  AFENUM_ALG_ORIENTED = 3,
  AFENUM_ALG_MLS = 4,
  AFENUM_ALG_MASE2K = 5
} afenum_algorithm;

typedef enum afenum_family {
  AFENUM_FAMILY_EXHAUSTIVE = 0,
  AFENUM_FAMILY_RANDOM = 1
} afenum_family;

typedef struct afenum_options {
  afenum_algorithm algorithm;
  afenum_family mls_family;
  uint64_t seed;             /* random set-containing families */
  double mls_delta;          /* failure budget of random families, in (0,1) */
  double time_limit_seconds; /* <= 0 disables the limit */
  size_t max_vertices;       /* 0 selects the per-algorithm default */
} afenum_options;

typedef struct afenum_stats {
  uint64_t leaves;
  uint64_t nodes;
  uint64_t pruned;
  uint64_t max_depth;
  uint64_t collation_work;
  uint64_t mase_calls;
  double wall_seconds;
} afenum_stats;

AFENUM_API const char* afenum_version(void);
AFENUM_API const char* afenum_status_string(afenum_status status);
AFENUM_API const char* afenum_last_error(void);
AFENUM_API void afenum_string_free(char* s);

AFENUM_API void afenum_options_init(afenum_options* options);
/* Accepts auto, oracle, mis, oriented, mls, mase2k. */
AFENUM_API afenum_status afenum_algorithm_from_name(const char* name, afenum_algorithm* out);

AFENUM_API afenum_status afenum_framework_parse(const char* text, size_t length, afenum_format format,
                                                afenum_framework** out);
AFENUM_API afenum_status afenum_framework_load(const char* path, afenum_format format, afenum_framework** out);
/* recipe is KIND:PARAMS, e.g. "bidirTriangles:2" or "randomDigraph:10,0.3,0.5". */
AFENUM_API afenum_status afenum_framework_generate(const char* recipe, uint64_t seed, afenum_framework** out);
AFENUM_API void afenum_framework_free(afenum_framework* af);

AFENUM_API size_t afenum_framework_size(const afenum_framework* af);
AFENUM_API size_t afenum_framework_arc_count(const afenum_framework* af);
AFENUM_API size_t afenum_framework_resolution_order(const afenum_framework* af);
/* NULL when v is out of range. */
AFENUM_API const char* afenum_framework_label(const afenum_framework* af, size_t v);
/* Serialises to apx or tgf; release *out with afenum_string_free. */
AFENUM_API afenum_status afenum_framework_write(const afenum_framework* af, afenum_format format, char** out);

/* options may be NULL for defaults; instance is a free-form name for the report. */
AFENUM_API afenum_status afenum_enumerate(const afenum_framework* af, const afenum_options* options,
                                          const char* instance, afenum_result** out);
AFENUM_API void afenum_result_free(afenum_result* result);

/* Extensions are ordered by size, then lexicographically by sorted labels. */
AFENUM_API size_t afenum_result_count(const afenum_result* result);
/* Vertex indices of extension i, in label order. */
AFENUM_API afenum_status afenum_result_extension(const afenum_result* result, size_t i, const size_t** members,
                                                 size_t* size);
/* Extension i written as {a,b,c}; NULL when i is out of range. */
AFENUM_API const char* afenum_result_extension_string(const afenum_result* result, size_t i);
AFENUM_API afenum_status afenum_result_stats(const afenum_result* result, afenum_stats* out);
/* Name of the algorithm that actually ran. */
AFENUM_API const char* afenum_result_algorithm(const afenum_result* result);
/* The run report as one JSON object without a trailing newline. */
AFENUM_API const char* afenum_result_report_json(const afenum_result* result);

/* CSV with columns r,base_oriented,base_mls,base_mis; release with afenum_string_free. */
AFENUM_API afenum_status afenum_thresholds_csv(size_t steps, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AFENUM_AFENUM_H */
