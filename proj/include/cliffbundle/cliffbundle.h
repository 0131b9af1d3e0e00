/* Copyright 2026 the cliffbundle authors */
/* SPDX-License-Identifier: Apache-2.0 */

/* C interface to the cliffbundle shared library. All functions returning
 * cb_status leave their outputs untouched on failure; the failure message is
 * retrievable per thread via cb_last_error(). Strings handed out through
 * char** parameters are heap copies owned by the caller; release them with
 * cb_string_free(). Pointers returned as const char* stay owned by the
 * library and must not be freed. */

#ifndef CLIFFBUNDLE_H_
#define CLIFFBUNDLE_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cb_status {
  CB_OK = 0,
  CB_INVALID_ARGUMENT = 1,
  CB_CAPACITY = 2,
  CB_SIGNATURE_MISMATCH = 3,
  CB_DIMENSION_MISMATCH = 4,
  CB_SINGULAR = 5,
  CB_STABILITY = 6,
  CB_PARSE = 7,
  CB_IO = 8,
  CB_INTERNAL = 9
} cb_status;

const char* cb_version(void);
const char* cb_last_error(void);
void cb_string_free(char* s);

/* ---- Clifford algebra handles ---- */

typedef struct cb_algebra cb_algebra;
typedef struct cb_mv cb_mv;

/* p plus-signed and q minus-signed generators */
cb_status cb_algebra_create(int p, int q, cb_algebra** out);
void cb_algebra_destroy(cb_algebra* a);

/* blade is the generator bitmask, 0 for the scalar unit */
cb_status cb_mv_basis(const cb_algebra* a, uint32_t blade, cb_mv** out);
cb_status cb_mv_from_json(const char* json, cb_mv** out);
void cb_mv_destroy(cb_mv* m);

cb_status cb_mv_product(const cb_mv* x, const cb_mv* y, cb_mv** out);
cb_status cb_mv_grade_project(const cb_mv* x, int grade, cb_mv** out);
cb_status cb_mv_to_json(const cb_mv* x, char** out);

/* ---- gamma representations ---- */

/* convention "mm"/"mostly-minus" or "mp"/"mostly-plus"; dim 2 or 4 */
cb_status cb_gamma_dump(const char* convention, int dim, char** json);

/* ---- runners ---- */

/* suite: clifford | gamma | geometry | bundle | evolution | all.
 * format: "json" or "csv". pass receives 1 when every check passed. */
cb_status cb_run_verify(const char* suite, uint64_t seed,
                        double tolerance_scale, double perturb,
                        const char* format, char** report, int* pass);

/* config: metric JSON, optionally wrapped with points/grid; returns CSV */
cb_status cb_run_geometry(const char* config_json, char** csv);

/* config: experiment JSON. out_base NULL or "" suppresses file output;
 * otherwise writes out_base + ".csv" and any requested field snapshots.
 * csv receives the time-series table; the final scalars are the last row's
 * observables. */
cb_status cb_run_evolve(const char* config_json, const char* out_base,
                        char** csv, double* final_norm, double* final_p_re,
                        double* final_p_im);

#ifdef __cplusplus
}
#endif

#endif /* CLIFFBUNDLE_H_ */
