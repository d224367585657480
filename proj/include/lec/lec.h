#ifndef LEC_LEC_H
#define LEC_LEC_H

/* C interface to the loose edge-connection library.
 *
 * Handles are opaque. Every call that can fail returns a lec_status; on
 * failure lec_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller and released with
 * lec_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LEC_API __declspec(dllexport)
#else
#define LEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LEC_OK = 0,
  LEC_ERR_PARSE = 1,
  LEC_ERR_INVALID_ARGUMENT = 2,
  LEC_ERR_PRECONDITION = 3,
  LEC_ERR_BUDGET = 4,
  LEC_ERR_PARTIAL_COLOURING = 5,
  LEC_ERR_INTERNAL = 6
} lec_status;

typedef enum { LEC_FORMAT_EDGE_LIST = 0, LEC_FORMAT_GRAPH6 = 1 } lec_format;

typedef struct lec_graph lec_graph;
typedef struct lec_certificate lec_certificate;

typedef struct {
  int max_oracle_edges; /* exhaustive search only up to this many edges */
  uint64_t budget;      /* search states */
  int workers;          /* oracle threads, >= 1 */
} lec_options;

LEC_API const char* lec_version(void);
LEC_API const char* lec_last_error(void);
LEC_API const char* lec_status_name(lec_status status);
LEC_API void lec_string_free(char* s);
LEC_API void lec_options_default(lec_options* options);

/* Graphs */
LEC_API lec_status lec_graph_parse(const char* text, size_t length, lec_format format, lec_graph** out);
/* `pairs` holds 2*m vertex ids in 0..n-1. */
LEC_API lec_status lec_graph_from_edges(int n, const int* pairs, int m, lec_graph** out);
/* Reference families: "R", "Q", "P" (t), "K" (n, or r s), "star" (s),
 * "path" (n), "cycle" (n), "leafy-cycle" (k t), "petersen". */
LEC_API lec_status lec_graph_generate(const char* family, const int* params, int count, lec_graph** out);
LEC_API void lec_graph_free(lec_graph* g);
LEC_API int lec_graph_order(const lec_graph* g);
LEC_API int lec_graph_size(const lec_graph* g);
LEC_API lec_status lec_graph_serialize(const lec_graph* g, lec_format format, char** out);

/* The number itself */
LEC_API lec_status lec_solve(const lec_graph* g, const lec_options* options, lec_certificate** out);
LEC_API void lec_certificate_free(lec_certificate* c);
/* Exact value, or -1 when only bounds are known. */
LEC_API int lec_certificate_value(const lec_certificate* c);
LEC_API int lec_certificate_lo(const lec_certificate* c);
LEC_API int lec_certificate_hi(const lec_certificate* c);
/* Colour of edge `edge` (input order) in the certificate colouring. */
LEC_API int lec_certificate_colour(const lec_certificate* c, int edge);
LEC_API lec_status lec_certificate_json(const lec_certificate* c, char** out);
/* Just the colouring, in the format lec_verify_json reads back. */
LEC_API lec_status lec_certificate_colouring_json(const lec_certificate* c, char** out);

/* Checks a colouring given as JSON; *accepted is 1 or 0. */
LEC_API lec_status lec_verify_json(const lec_graph* g, const char* colouring_json, int* accepted,
                                   char** report);
LEC_API lec_status lec_classify_json(const lec_graph* g, char** out);
LEC_API lec_status lec_blocks_json(const lec_graph* g, char** out);
LEC_API lec_status lec_oracle_json(const lec_graph* g, const lec_options* options, char** out);
/* DOT rendering of a colouring given as JSON, or of the solver's colouring
 * when colouring_json is NULL. plain != 0 omits colour attributes. */
LEC_API lec_status lec_export_dot(const lec_graph* g, const char* colouring_json, const lec_options* options,
                                  int plain, char** out);

#ifdef __cplusplus
}
#endif

#endif
