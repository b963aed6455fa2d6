/*
 * C interface to the hamvf solver: homotopy-analysis iteration schemes (HAM, MHAM,
 * mHAM, q-HAM, ND-HAM) for Volterra-Fredholm integro-differential equations with
 * initial conditions, computed in exact exp-polynomial arithmetic.
 *
 * All objects are opaque handles owned by the caller and released with the matching
 * *_free function. Functions return HAMVF_OK or an error status; the message of the
 * most recent failure on the calling thread is available from hamvf_last_error().
 * Strings returned through `char**` are heap allocated; release them with
 * hamvf_string_free().
 */
#ifndef HAMVF_HAMVF_H
#define HAMVF_HAMVF_H

#include <stddef.h>

#if defined(HAMVF_BUILDING_LIBRARY)
#define HAMVF_API __attribute__((visibility("default")))
#else
#define HAMVF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hamvf_status {
  HAMVF_OK = 0,
  HAMVF_E_INVALID_ARGUMENT = 1,
  HAMVF_E_CONFIG = 2,
  HAMVF_E_SOLVER = 3,
  HAMVF_E_NOT_EXACT = 4,
  HAMVF_E_NON_CLOSED_CONSTANT = 5,
  HAMVF_E_OUT_OF_RANGE = 6,
  HAMVF_E_IO = 7,
  HAMVF_E_INTERNAL = 8
} hamvf_status;

/* A parsed run configuration (problem, methods, output switches). */
typedef struct hamvf_spec hamvf_spec;
/* The iterates u_0..u_M of one method together with their summation weights. */
typedef struct hamvf_solution hamvf_solution;

/* Receives listing text produced by hamvf_execute. */
typedef void (*hamvf_write_fn)(const char* text, size_t length, void* user);

HAMVF_API const char* hamvf_version(void);
HAMVF_API const char* hamvf_last_error(void);
HAMVF_API void hamvf_string_free(char* text);

/* Configuration -------------------------------------------------------------- */

HAMVF_API hamvf_status hamvf_spec_parse(const char* text, size_t length, hamvf_spec** out);
HAMVF_API void hamvf_spec_free(hamvf_spec* spec);
HAMVF_API size_t hamvf_spec_method_count(const hamvf_spec* spec);
/* Borrowed pointer, valid until the spec is modified or freed. */
HAMVF_API const char* hamvf_spec_method_label(const hamvf_spec* spec, size_t index);
/* Keeps only the methods whose labels are listed, in spec order. Fails if a label is unknown. */
HAMVF_API hamvf_status hamvf_spec_select(hamvf_spec* spec, const char* const* labels, size_t count);
/* Canonical text form of the spec (parses back to an equal spec). */
HAMVF_API hamvf_status hamvf_spec_render(const hamvf_spec* spec, char** out);

/* Solving -------------------------------------------------------------------- */

HAMVF_API hamvf_status hamvf_solve(const hamvf_spec* spec, size_t method_index, hamvf_solution** out);
HAMVF_API void hamvf_solution_free(hamvf_solution* solution);
/* M, the index of the last iterate. */
HAMVF_API size_t hamvf_solution_iterations(const hamvf_solution* solution);
/* Nonzero when an iterate exceeded the configured coefficient bound; *iterate gets its index. */
HAMVF_API int hamvf_solution_diverged(const hamvf_solution* solution, size_t* iterate);
HAMVF_API hamvf_status hamvf_solution_iterate_text(const hamvf_solution* solution, size_t m, char** out);
/* sum_{i<=m} w_i u_i, pretty printed. */
HAMVF_API hamvf_status hamvf_solution_partial_sum_text(const hamvf_solution* solution, size_t m, char** out);
HAMVF_API hamvf_status hamvf_solution_eval(const hamvf_solution* solution, size_t m, double t, double* value);
/* Max over a uniform grid of |N[sum_M](t) - f(t)|. */
HAMVF_API hamvf_status hamvf_solution_residual_norm(const hamvf_solution* solution, unsigned grid_size,
                                                    double* value);

/* Batch execution ------------------------------------------------------------ */

/* Runs every method of the spec, streams the expression listing to `sink`, writes the
 * CSV table if configured and reports per-method failures through `errors`. Returns
 * HAMVF_OK, HAMVF_E_CONFIG or HAMVF_E_SOLVER (matching the CLI exit codes 0/2/3). */
HAMVF_API hamvf_status hamvf_execute(const hamvf_spec* spec, hamvf_write_fn sink, hamvf_write_fn errors,
                                     void* user);

#ifdef __cplusplus
}
#endif

#endif /* HAMVF_HAMVF_H */
