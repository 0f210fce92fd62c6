/*
 * gainnbc C interface.
 *
 * Gain graphs K_n^{ab}, their no-broken-circuit (NBC) forests, the tree bijection for
 * a+b in {0,1}, and characteristic/Poincare polynomials of the matching hyperplane
 * arrangements. Results cross the boundary as JSON or decimal text owned by a
 * gnbc_string handle; every call returns a gnbc_status and, on failure, leaves a
 * message retrievable with gnbc_last_error() on the calling thread.
 */
#ifndef GAINNBC_H
#define GAINNBC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GAINNBC_BUILDING)
#    define GAINNBC_API __declspec(dllexport)
#  else
#    define GAINNBC_API __declspec(dllimport)
#  endif
#else
#  define GAINNBC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gnbc_status {
  GNBC_OK = 0,
  GNBC_ERR_INVALID_ARGUMENT = 1,
  GNBC_ERR_OUT_OF_SCOPE = 2, /* e.g. closed forms or the bijection with a+b outside {0,1} */
  GNBC_ERR_GUARD = 3,        /* instance exceeds an enumeration or point-count guard */
  GNBC_ERR_PARSE = 4,
  GNBC_ERR_VERIFICATION = 5, /* a cross-check disagreed; the report is still returned */
  GNBC_ERR_INTERNAL = 6
} gnbc_status;

typedef enum gnbc_method {
  GNBC_METHOD_FORMULA = 0,  /* closed forms (a+b in {0,1}) */
  GNBC_METHOD_NBC = 1,      /* NBC enumeration by height functions */
  GNBC_METHOD_CHARPOLY = 2  /* finite-field point counts + interpolation */
} gnbc_method;

typedef struct gnbc_params {
  int n;
  int64_t a;
  int64_t b;
} gnbc_params;

/* Zero fields select the defaults (n <= 6 for enumeration, q^n <= 10^7 point counting). */
typedef struct gnbc_limits {
  int max_enum_n;
  uint64_t max_points;
} gnbc_limits;

typedef struct gnbc_verify_config {
  int max_n;               /* cells n = 1..max_n */
  const int64_t* grid_a;   /* grid_len (a,b) pairs; NULL/0 selects braid, Shi, Catalan, Linial */
  const int64_t* grid_b;
  size_t grid_len;
  const uint64_t* primes;  /* NULL/0: the n+1 smallest admissible primes per cell */
  size_t prime_count;
  gnbc_limits limits;
  unsigned threads;        /* 0: hardware concurrency */
  int timing;              /* nonzero adds wall-clock seconds (breaks byte-reproducibility) */
} gnbc_verify_config;

typedef struct gnbc_graph gnbc_graph;
typedef struct gnbc_string gnbc_string;

GAINNBC_API const char* gnbc_version(void);
GAINNBC_API const char* gnbc_status_name(gnbc_status status);
/* Message for the last failing call on this thread; "" if none. */
GAINNBC_API const char* gnbc_last_error(void);

GAINNBC_API const char* gnbc_string_data(const gnbc_string* s);
GAINNBC_API size_t gnbc_string_size(const gnbc_string* s);
GAINNBC_API void gnbc_string_free(gnbc_string* s);

/* Preset names: braid, shi, catalan, linial. */
GAINNBC_API gnbc_status gnbc_params_preset(const char* name, int n, gnbc_params* out);

GAINNBC_API gnbc_status gnbc_graph_expansion(const gnbc_params* params, gnbc_graph** out);
/* Text format: "n=<int>" header, then one "g(i,j)" edge per line with i < j. */
GAINNBC_API gnbc_status gnbc_graph_parse(const char* text, gnbc_graph** out);
GAINNBC_API void gnbc_graph_free(gnbc_graph* graph);
GAINNBC_API int gnbc_graph_vertex_count(const gnbc_graph* graph);
GAINNBC_API size_t gnbc_graph_edge_count(const gnbc_graph* graph);
GAINNBC_API gnbc_status gnbc_graph_format(const gnbc_graph* graph, gnbc_string** out);
/* JSON edge-count profile {"j": "count"} of the graph's NBC forests. */
GAINNBC_API gnbc_status gnbc_graph_nbc_profile(const gnbc_graph* graph, const gnbc_limits* limits,
                                               gnbc_string** out);
/* JSON coefficient array of the interpolated characteristic polynomial. */
GAINNBC_API gnbc_status gnbc_graph_charpoly(const gnbc_graph* graph, const uint64_t* primes,
                                            size_t prime_count, const gnbc_limits* limits,
                                            gnbc_string** out);

/* Decimal region count of the arrangement of K_n^{ab}. */
GAINNBC_API gnbc_status gnbc_region_count(const gnbc_params* params, gnbc_method method,
                                          const gnbc_limits* limits, gnbc_string** out);
/* JSON ascending coefficients. reduced != 0 drops the factor q (FORMULA method only).
 * primes may be NULL for the CHARPOLY method. */
GAINNBC_API gnbc_status gnbc_charpoly(const gnbc_params* params, gnbc_method method, int reduced,
                                      const uint64_t* primes, size_t prime_count,
                                      const gnbc_limits* limits, gnbc_string** out);
GAINNBC_API gnbc_status gnbc_poincare(const gnbc_params* params, const gnbc_limits* limits,
                                      gnbc_string** out);

/* JSON array of NBC forests, each an array of {"edges", "heights"} components. */
GAINNBC_API gnbc_status gnbc_nbc_forests(const gnbc_params* params, const gnbc_limits* limits,
                                         gnbc_string** out);
GAINNBC_API gnbc_status gnbc_nbc_profile(const gnbc_params* params, const gnbc_limits* limits,
                                         gnbc_string** out);

/* Codecs on JSON text. An object is a single tree, an array a forest on [params->n]. */
GAINNBC_API gnbc_status gnbc_encode(const gnbc_params* params, const char* json,
                                    gnbc_string** out);
GAINNBC_API gnbc_status gnbc_decode(const gnbc_params* params, const char* json,
                                    gnbc_string** out);
/* With json == NULL: exhaustive round trip over all NBC trees and (1-a,b)-trees on [n].
 * Otherwise round-trips the given NBC tree/forest. Returns GNBC_ERR_VERIFICATION (with the
 * report) when a mismatch is found. */
GAINNBC_API gnbc_status gnbc_roundtrip(const gnbc_params* params, const char* json,
                                       const gnbc_limits* limits, gnbc_string** out);
/* Braid (a=b=0) or Shi (a=0,b=1) forest of the JSON input mapped to its tree on n+1 vertices. */
GAINNBC_API gnbc_status gnbc_correspondence(const gnbc_params* params, const char* json,
                                            gnbc_string** out);

/* Verification report (JSON). GNBC_ERR_VERIFICATION when any cell disagrees. */
GAINNBC_API gnbc_status gnbc_verify(const gnbc_verify_config* config, gnbc_string** out);

#ifdef __cplusplus
}
#endif

#endif /* GAINNBC_H */
