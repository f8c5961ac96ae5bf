/*
 * C interface to the rcft library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rcft_status; on failure, rcft_last_error()
 * describes the error for the calling thread until its next failing call.
 * Strings returned through char** are owned by the caller and released with
 * rcft_string_free. Complex numbers are passed as {re, im} double pairs, and
 * matrices as row-major arrays of such pairs.
 *
 * Functions named *_report return a JSON document describing a set of checks.
 */
#ifndef RCFT_RCFT_H
#define RCFT_RCFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RCFT_API __declspec(dllexport)
#else
#define RCFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcft_status {
  RCFT_OK = 0,
  RCFT_INVALID_ARGUMENT = 1,
  RCFT_VALIDATION = 2,
  RCFT_NON_INTEGRAL = 3,
  RCFT_DOMAIN = 4,
  RCFT_LIMIT = 5,
  RCFT_IO = 6,
  RCFT_INTERNAL = 7
} rcft_status;

RCFT_API const char* rcft_version(void);
RCFT_API const char* rcft_last_error(void);
RCFT_API const char* rcft_status_name(rcft_status status);
RCFT_API void rcft_string_free(char* s);

/* ---- Modular data ---- */

typedef struct rcft_modular_data rcft_modular_data;

/* "ising", "su2:K", or a path to a JSON file. Files failing validation at tol give RCFT_VALIDATION. */
RCFT_API rcft_status rcft_md_resolve(const char* spec, double tol, rcft_modular_data** out);
RCFT_API rcft_status rcft_md_parse_json(const char* text, double tol, rcft_modular_data** out);
/* As rcft_md_resolve, but files only get structural checks; for validation reports. */
RCFT_API rcft_status rcft_md_resolve_unvalidated(const char* spec, rcft_modular_data** out);
RCFT_API void rcft_md_free(rcft_modular_data* md);

RCFT_API size_t rcft_md_size(const rcft_modular_data* md);
RCFT_API size_t rcft_md_vacuum(const rcft_modular_data* md);
/* Label name, valid while md lives; NULL when out of range. */
RCFT_API const char* rcft_md_label(const rcft_modular_data* md, size_t i);
/* By name, alias, or decimal index. */
RCFT_API rcft_status rcft_md_find_label(const rcft_modular_data* md, const char* name, size_t* index);
RCFT_API rcft_status rcft_md_s(const rcft_modular_data* md, size_t i, size_t j, double out[2]);
RCFT_API rcft_status rcft_md_t(const rcft_modular_data* md, size_t i, double out[2]);
RCFT_API rcft_status rcft_md_central_charge(const rcft_modular_data* md, char** out);
RCFT_API rcft_status rcft_md_weight(const rcft_modular_data* md, size_t i, char** out);
RCFT_API rcft_status rcft_md_to_json(const rcft_modular_data* md, char** out);

/* {"tolerance", "pass", "checks": [{"name", "residual", "pass"}]} */
RCFT_API rcft_status rcft_md_validate_report(const rcft_modular_data* md, double tol, char** out);
/* SL(2,Z) relations of (S, T): {"pass", "relations": [{"name", "scalar", "residual", "pass"}]}.
   Returns RCFT_VALIDATION when a relation fails. */
RCFT_API rcft_status rcft_sl2z_report(const rcft_modular_data* md, char** out);

/* ---- Fusion ---- */

RCFT_API rcft_status rcft_fusion_coefficient(const rcft_modular_data* md, size_t a, size_t b,
                                             size_t c, double tol, unsigned* out);
/* out holds n^3 entries N[a][b][c]. */
RCFT_API rcft_status rcft_fusion_tensor(const rcft_modular_data* md, double tol, unsigned* out,
                                        size_t len);
RCFT_API rcft_status rcft_block_dimension(const rcft_modular_data* md, size_t genus,
                                          const size_t* punctures, size_t n_punctures, double tol,
                                          uint64_t* out);
RCFT_API rcft_status rcft_quantum_dimension(const rcft_modular_data* md, size_t a, double* out);

/* ---- q-series ---- */

typedef struct rcft_series_list rcft_series_list;

/* Characters of built-in modular data; cutoff is a "p/q" string, NULL for the default. */
RCFT_API rcft_status rcft_characters(const rcft_modular_data* md, const char* cutoff,
                                     rcft_series_list** out);
/* The two Ising blocks as series in q = exp(2 pi i tau). */
RCFT_API rcft_status rcft_lift_to_tau(const char* cutoff, rcft_series_list** out);
RCFT_API void rcft_series_free(rcft_series_list* list);
RCFT_API size_t rcft_series_count(const rcft_series_list* list);
RCFT_API const char* rcft_series_name(const rcft_series_list* list, size_t i);
/* Lines "p/q  c", one per retained term. */
RCFT_API rcft_status rcft_series_listing(const rcft_series_list* list, size_t i, char** out);
/* [{"name", "cutoff", "terms": [["p/q", "c"], ...]}] */
RCFT_API rcft_status rcft_series_to_json(const rcft_series_list* list, char** out);
RCFT_API rcft_status rcft_series_evaluate(const rcft_series_list* list, size_t i, double tau_re,
                                          double tau_im, double value[2], double* bound);
/* which is 'S' or 'T'. The residual is returned even when it exceeds tol. */
RCFT_API rcft_status rcft_check_transform(const rcft_modular_data* md,
                                          const rcft_series_list* chars, double tau_re,
                                          double tau_im, char which, double tol, double* residual);

/* ---- Modular invariants ---- */

typedef struct rcft_invariant_list rcft_invariant_list;

RCFT_API rcft_status rcft_invariants(const rcft_modular_data* md, int bound_slack,
                                     uint64_t max_candidates, rcft_invariant_list** out);
RCFT_API void rcft_invariants_free(rcft_invariant_list* list);
RCFT_API size_t rcft_invariants_count(const rcft_invariant_list* list);
/* out holds n^2 entries, row-major. */
RCFT_API rcft_status rcft_invariant_entries(const rcft_invariant_list* list, size_t k, int* out,
                                            size_t len);
RCFT_API rcft_status rcft_invariant_residual(const rcft_invariant_list* list, size_t k,
                                             double* out);
/* sum Z_MN chi_M conj(chi_N) at tau, using characters from rcft_characters. */
RCFT_API rcft_status rcft_partition_function(const rcft_modular_data* md,
                                             const rcft_invariant_list* list, size_t k,
                                             const rcft_series_list* chars, double tau_re,
                                             double tau_im, double tol, double out[2]);

/* ---- Ising four-point blocks ---- */

typedef struct rcft_monodromy {
  double matrix[8]; /* 2x2 complex, row-major */
  int closed;
  size_t steps;
  double det_modulus;
  double start[2];
  double end[2];
} rcft_monodromy;

RCFT_API rcft_status rcft_blocks_at(double w_re, double w_im, double out[4]);
RCFT_API rcft_status rcft_monodromy_circle(double center_re, double center_im, double radius,
                                           double turns, double clearance, rcft_monodromy* out);
/* Path text: optional "start re,im", then "line re,im" / "arc re,im angle" lines. */
RCFT_API rcft_status rcft_monodromy_path(const char* path_text, double clearance,
                                         rcft_monodromy* out);

/* ---- KZ connection ---- */

/* loop is "swapIJ" or "loopIJ" (1-based legs) with base z_i = i - 1, or NULL to read
   path_text: one configuration per line of n "re,im" points. twice_spins may be NULL
   for four spin-1/2 legs. out receives dim^2 complex entries; *dim is always set. */
RCFT_API rcft_status rcft_kz_monodromy(int level, const int* twice_spins, size_t n_legs,
                                       const char* loop, const char* path_text, double* out,
                                       size_t capacity, size_t* dim);
/* {"level", "spins", "loop", "dimension", "matrix", "eigenvalues", "condition_number",
    "residuals": {...}} */
RCFT_API rcft_status rcft_kz_report(int level, const int* twice_spins, size_t n_legs,
                                    const char* loop, const char* path_text, char** out);
RCFT_API rcft_status rcft_drinfeld_kohno_report(int level, char** out);

/* ---- Ising braid representation ---- */

RCFT_API rcft_status rcft_braid_report(char** out);
RCFT_API rcft_status rcft_braid_closure(size_t max_elems, int* finite, size_t* elements);

/* ---- Finite-group orbifolds ---- */

typedef struct rcft_group rcft_group;

/* Built-in name (trivial, Z2, Z3, Z4, Z2xZ2, S3, D4, Q8, A4) or a table file. */
RCFT_API rcft_status rcft_group_resolve(const char* spec, rcft_group** out);
RCFT_API void rcft_group_free(rcft_group* group);
RCFT_API size_t rcft_group_order(const rcft_group* group);
RCFT_API const char* rcft_group_name(const rcft_group* group);
RCFT_API rcft_status rcft_flat_count(const rcft_group* group, int genus, double budget,
                                     uint64_t* out);
/* Decimal string. degrees may be NULL for a built-in group. */
RCFT_API rcft_status rcft_mednykh_count(const rcft_group* group, int genus, const int* degrees,
                                        size_t n_degrees, char** out);
/* {"genus", "tuples", "classes": [{"representative", "orbit_size"}]} */
RCFT_API rcft_status rcft_flat_classes_report(const rcft_group* group, int genus, double budget,
                                              char** out);
/* {"classes", "S", "T", "inversion", "relations": [{"name", "holds"}], "pass"} */
RCFT_API rcft_status rcft_torus_action_report(const rcft_group* group, char** out);

#ifdef __cplusplus
}
#endif

#endif
