/* C interface to the pzr realizer library.
 *
 * Every call returns a pzr_status; PZR_OK is zero.  On failure the message
 * and a JSON detail object are available from pzr_last_error() and
 * pzr_last_error_detail() until the next call on the same thread.  Strings
 * returned through char** are owned by the caller and released with
 * pzr_string_free.  Handles are immutable once created and may be read from
 * several threads.
 */
#ifndef PZR_H
#define PZR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PZR_API __declspec(dllexport)
#else
#define PZR_API __attribute__((visibility("default")))
#endif

typedef enum pzr_status {
  PZR_OK = 0,
  PZR_BAD_INPUT,
  PZR_CYCLIC_INPUT,
  PZR_NOT_REDUCED,
  PZR_NON_PLANAR,
  PZR_DISCONNECTED,
  PZR_MALFORMED_ROTATION,
  PZR_ROOT_NOT_ON_FACE,
  PZR_NOT_INCIDENT,
  PZR_NOT_A_CYCLE,
  PZR_NO_ZERO,
  PZR_MULTIPLE_SOURCES,
  PZR_NON_PLANAR_CONDENSATION,
  PZR_NOT_EMBEDDED,
  PZR_COMPARABLE_INPUT,
  PZR_NOT_COMPARABLE,
  PZR_INDEX_OUT_OF_RANGE,
  PZR_SAME_ELEMENT,
  PZR_NOT_INSIDE,
  PZR_NOT_IN_BLOCK,
  PZR_BAD_PARAM,
  PZR_TOO_LARGE,
  /* A construction step contradicted a proved statement. */
  PZR_VALIDATION_FAILED,
  PZR_NO_CONTAINING_BLOCK,
  PZR_CONSTRUCTION_FAILED,
  PZR_COMPARATOR_NOT_TOTAL,
  PZR_NOT_REVERSIBLE,
  PZR_BOTH_TILTS,
  PZR_CYCLIC_H,
  PZR_COVERAGE_GAP,
  /* A verifier found violations; the report lists them. */
  PZR_VIOLATIONS = 100,
  PZR_INTERNAL = 101
} pzr_status;

typedef struct pzr_graph pzr_graph;     /* parsed graph document */
typedef struct pzr_bundle pzr_bundle;   /* thirteen linear orders */
typedef struct pzr_labels pzr_labels;   /* one label per vertex */

PZR_API const char* pzr_status_name(int status);
/* 0 ok, 1 violations, 2 bad input, 3 non-planar, 4 no zero or multiple
 * sources, 5 theorem violation. */
PZR_API int pzr_exit_code(int status);
PZR_API int pzr_is_theorem_violation(int status);
PZR_API const char* pzr_last_error(void);
PZR_API const char* pzr_last_error_detail(void);
PZR_API void pzr_string_free(char* s);

PZR_API int pzr_graph_from_json(const char* json, pzr_graph** out);
PZR_API int pzr_graph_to_json(const pzr_graph* g, char** out);
PZR_API size_t pzr_graph_vertex_count(const pzr_graph* g);
PZR_API void pzr_graph_free(pzr_graph* g);

/* Computes (or verifies) a rotation system; outer_face < 0 keeps the
 * document's choice.  Writes an embedding report. */
PZR_API int pzr_embed(const pzr_graph* g, int mirror, long outer_face, char** report_json);

/* The graph must be the cover graph of a poset with a zero. */
PZR_API int pzr_realize(const pzr_graph* g, pzr_bundle** out);
PZR_API int pzr_bundle_to_json(const pzr_bundle* b, char** out);
PZR_API int pzr_bundle_from_json(const char* json, pzr_bundle** out);
PZR_API void pzr_bundle_free(pzr_bundle* b);
/* Answers a <= b from the bundle. */
PZR_API int pzr_bundle_query(const pzr_bundle* b, size_t a, size_t c, int* answer);

PZR_API int pzr_labels_from_bundle(const pzr_bundle* b, pzr_labels** out);
PZR_API int pzr_labels_to_text(const pzr_labels* l, char** out);
PZR_API int pzr_labels_from_text(const char* text, pzr_labels** out);
PZR_API size_t pzr_labels_count(const pzr_labels* l);
PZR_API unsigned pzr_labels_width(const pzr_labels* l);
PZR_API size_t pzr_labels_bit_length(const pzr_labels* l);
PZR_API int pzr_labels_get_hex(const pzr_labels* l, size_t v, char** out);
PZR_API void pzr_labels_free(pzr_labels* l);
/* Reachability from two hex labels of field width w alone. */
PZR_API int pzr_query_hex(const char* label_u, const char* label_v, unsigned w, int* answer);

/* Condense, reduce, embed and realize an arbitrary digraph.  Labels are
 * per original vertex; component_map_json may be NULL. */
PZR_API int pzr_label_digraph(const pzr_graph* g, pzr_labels** out, char** component_map_json);

/* Compare decoding against the poset on all ordered pairs.  Returns
 * PZR_VIOLATIONS when any pair disagrees; the report is written either way. */
PZR_API int pzr_verify_bundle(const pzr_graph* g, const pzr_bundle* b, char** report_json);
PZR_API int pzr_verify_labels(const pzr_graph* g, const pzr_labels* l, char** report_json);
/* Same as pzr_verify_labels but against reachability in a digraph. */
PZR_API int pzr_verify_digraph_labels(const pzr_graph* g, const pzr_labels* l, char** report_json);

/* Realizer of size at most 2k+2 with a standard-example witness of size k. */
PZR_API int pzr_dimbound(const pzr_graph* g, char** report_json);

/* family: wheel, nested, pathology, random, digraph, standard, chain.
 * params: {"d","depth","n","seed","cycle_fraction"} as the family needs. */
PZR_API int pzr_generate(const char* family, const char* params_json, char** graph_json);

/* which: dim, se, reversible (params {"pairs":[[a,b],...]}), incomparable. */
PZR_API int pzr_oracle(const pzr_graph* g, const char* which, const char* params_json, char** result_json);

#ifdef __cplusplus
}
#endif

#endif
