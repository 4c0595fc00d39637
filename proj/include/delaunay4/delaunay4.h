#ifndef DELAUNAY4_H
#define DELAUNAY4_H

/* C interface to the delaunay4 library. Inputs and results are JSON text;
 * rationals are written "p/q". Every call returning d4_status leaves a
 * message in d4_last_error() on failure. */

#if defined(__GNUC__)
#define D4_API __attribute__((visibility("default")))
#else
#define D4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  D4_OK = 0,
  D4_ERR_PARSE,
  D4_ERR_INVALID_ARGUMENT,
  D4_ERR_DIMENSION_MISMATCH,
  D4_ERR_SINGULAR,
  D4_ERR_NOT_COSPHERICAL,
  D4_ERR_NOT_POSITIVE_DEFINITE,
  D4_ERR_UNKNOWN_NAME,
  D4_ERR_NOT_A_REFINEMENT,
  D4_ERR_INTERNAL
} d4_status;

/* A finished computation: its JSON encoding and a pass flag. */
typedef struct d4_report d4_report;

/* A parsed positive semidefinite form. */
typedef struct d4_form d4_form;

/* Thread-local; valid until the next failing call on this thread. */
D4_API const char* d4_last_error(void);
D4_API const char* d4_status_name(d4_status s);

D4_API d4_status d4_form_parse(const char* json, d4_form** out);
D4_API int d4_form_rank(const d4_form* f);
D4_API void d4_form_free(d4_form* f);

/* Star of 0 for a positive definite form; with mod_translation only the
 * orbit representatives. */
D4_API d4_status d4_star(const d4_form* f, int mod_translation, d4_report** out);

D4_API d4_status d4_catalog_list(d4_report** out);
D4_API d4_status d4_catalog_show(const char* name, d4_report** out);

/* Interior form of a named cone. weights is "w1,w2,..." or NULL for all ones. */
D4_API d4_status d4_sample(const char* cone, const char* weights, d4_report** out);

D4_API d4_status d4_fuse(const char* coarse, const char* fine, d4_report** out);

/* Generation properties of a cell through 0. pieces_json may be NULL.
 * The report passes when the cell satisfies its empty-sphere certificate
 * under f. */
D4_API d4_status d4_gen(const char* cell_json, const d4_form* f, const char* pieces_json, d4_report** out);

D4_API d4_status d4_table(int which, d4_report** out);
D4_API d4_status d4_faces(d4_report** out);

/* suite: all, dim2, dim3, dim4, tables, faces, theorem, properties. */
D4_API d4_status d4_verify(const char* suite, d4_report** out);

D4_API const char* d4_report_json(const d4_report* r);
D4_API int d4_report_passed(const d4_report* r);
D4_API void d4_report_free(d4_report* r);

#ifdef __cplusplus
}
#endif

#endif
