/* hardycheck: numerical verification of Hardy-type inequalities and the
 * integral operators behind them (Riesz potentials, fractional
 * Laplacians, maximal functions, weighted kernel splits).
 *
 * C interface of the shared library. All functions return hc_status;
 * on failure hc_last_error() describes the problem. Handles are opaque
 * and owned by the caller until the matching *_destroy call.
 */
#ifndef HARDYCHECK_H
#define HARDYCHECK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERROR_INVALID_ARGUMENT = 1, /* rejected input or configuration */
  HC_ERROR_RUNTIME = 2,          /* numerical failure */
  HC_ERROR_IO = 3                /* file could not be read or written */
} hc_status;

/* Thread-local message describing the most recent failure. */
const char* hc_last_error(void);
const char* hc_version(void);

/* ------------------------------------------------------------------ */
/* Sampled functions on the cell-centered grid over [-L, L]^n          */

typedef struct hc_field hc_field;

/* values has length points^dim, row-major in axis order; pass NULL for
 * an all-zero field. dim in {1,2,3}, points even and >= 8. */
hc_status hc_field_create(int dim, int points, double halfwidth,
                          const double* values, hc_field** out);

/* generator: "gaussian", "bump", "plateau", or "bandlimited:<seed>". */
hc_status hc_field_generate(int dim, int points, double halfwidth,
                            const char* generator, hc_field** out);

int64_t hc_field_size(const hc_field* f);
hc_status hc_field_values(const hc_field* f, double* out);
void hc_field_destroy(hc_field* f);

/* Operators. Outputs are freshly allocated fields. */
hc_status hc_frac_laplacian(const hc_field* f, double s, hc_field** out);
hc_status hc_riesz_potential(const hc_field* f, double alpha, hc_field** out);
hc_status hc_riesz_convolution(const hc_field* f, double alpha, hc_field** out);
hc_status hc_maximal(const hc_field* f, int uncentered, hc_field** out);

/* Norms and weighted integrals. */
hc_status hc_lp_norm(const hc_field* f, double p, double* out);
hc_status hc_sobolev_norm(const hc_field* f, double s, double p, double* out);
hc_status hc_weighted_integral(const hc_field* f, double p, double a,
                               double inner_cutoff, double* out);

/* ------------------------------------------------------------------ */
/* Experiment runner                                                   */

typedef struct hc_run hc_run;

hc_status hc_run_create(hc_run** out);
void hc_run_destroy(hc_run* run);

/* Flat configuration, keys matching the CLI flag names. Unknown keys
 * are rejected. */
hc_status hc_run_set(hc_run* run, const char* key, const char* value);

/* Loads key=value lines ('#' comments); values already set on the run
 * take precedence over file values. */
hc_status hc_run_load_config(hc_run* run, const char* path);

/* Comma-separated experiment names accepted by hc_run_execute. */
const char* hc_experiments(void);

/* Runs the named experiment and replaces the run's report rows. */
hc_status hc_run_execute(hc_run* run, const char* experiment);

int hc_run_row_count(const hc_run* run);

/* Numeric fields: "n","p","s","q","kappa","N","L","lhs","rhs","ratio",
 * "pass" (0/1), "seconds". Unset fields read as NaN. */
hc_status hc_run_row_value(const hc_run* run, int row, const char* field,
                           double* out);

/* Pointer stays valid while the run holds its rows. */
hc_status hc_run_row_experiment(const hc_run* run, int row, const char** out);

/* 1 when every row passed (vacuously 1 for zero rows). */
int hc_run_all_passed(const hc_run* run);

hc_status hc_run_write_csv(const hc_run* run, const char* path);
hc_status hc_run_write_json(const hc_run* run, const char* path);

/* Human-readable table; pointer valid until the next call on this run. */
const char* hc_run_summary(hc_run* run);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HARDYCHECK_H */
