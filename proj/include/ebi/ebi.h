/*
 * C interface to the edge-balanced index set library for complete bipartite
 * graphs K_{m,n} with m odd, n even and m > n >= 2.
 *
 * Conventions:
 *  - Handles are opaque; every *_create/_build/_run/_parse function returns a
 *    status and writes the handle through an out-parameter. Free each handle
 *    with its matching *_free. NULL is always safe to free.
 *  - Char** out-parameters receive heap strings owned by the caller; release
 *    them with ebi_string_free.
 *  - On any non-OK status, ebi_last_error() returns a message for the calling
 *    thread. Out-parameters are untouched on failure.
 *  - Rows and columns are 1-based throughout, matching the vertex names
 *    v_j^i / v_j^* (rows) and u_c (columns).
 */

#ifndef EBI_H
#define EBI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ebi_status {
  EBI_OK = 0,
  EBI_ERR_INVALID_PARAMS = 1,   /* m, n outside the supported graph class */
  EBI_ERR_INVALID_ARGUMENT = 2, /* bad coordinates, sizes, or enum values */
  EBI_ERR_UNSUPPORTED = 3,      /* operation undefined for these parameters */
  EBI_ERR_CAP_EXHAUSTED = 4,    /* search aborted by the state cap */
  EBI_ERR_PARSE = 5,            /* malformed labeling document */
  EBI_ERR_INTERNAL = 6
} ebi_status;

typedef enum ebi_construction {
  EBI_CONSTRUCTION_F = 0,      /* balanced start, index 0 */
  EBI_CONSTRUCTION_FPRIME = 1  /* skewed start, index n-2; needs n >= 4 */
} ebi_construction;

typedef struct ebi_params ebi_params;
typedef struct ebi_labeling ebi_labeling;
typedef struct ebi_index_set ebi_index_set;
typedef struct ebi_trajectory ebi_trajectory;

/* One switch: the 1-edge (a_one_row, pivot_col) and the 0-edge
 * (a_zero_row, pivot_col) swap labels. */
typedef struct ebi_switch_op {
  int pivot_col;
  int a_one_row;
  int a_zero_row;
} ebi_switch_op;

typedef struct ebi_search_config {
  uint64_t state_cap;   /* abort after this many visited states */
  int threads;          /* canonical search workers; <= 1 is sequential */
  int column_symmetry;  /* nonzero: prune by column permutations too */
  int both_parities;    /* nonzero: odd m*n tries both e(1) choices */
} ebi_search_config;

typedef struct ebi_search_stats {
  uint64_t states_visited;
  uint64_t leaves;
  double seconds;
} ebi_search_stats;

/* ---- graph parameters -------------------------------------------------- */

ebi_status ebi_params_create(int m, int n, ebi_params** out);
void ebi_params_free(ebi_params* params);

int ebi_params_m(const ebi_params* params);
int ebi_params_n(const ebi_params* params);
/* q and r from m = q*(n/2 + 1) + r, 0 <= r <= n/2. */
int ebi_params_q(const ebi_params* params);
int ebi_params_r(const ebi_params* params);

/* Vertex display names: "v_2^1", "v_1^*", "u_3". */
ebi_status ebi_params_a_name(const ebi_params* params, int row, char** out);
ebi_status ebi_params_b_name(const ebi_params* params, int col, char** out);

/* ---- labelings --------------------------------------------------------- */

ebi_status ebi_labeling_build(const ebi_params* params, ebi_construction which,
                              ebi_labeling** out);
/* Uniformly random edge-friendly labeling; deterministic per seed. */
ebi_status ebi_labeling_random(const ebi_params* params, uint64_t seed, ebi_labeling** out);
ebi_status ebi_labeling_clone(const ebi_labeling* lab, ebi_labeling** out);
void ebi_labeling_free(ebi_labeling* lab);

/* JSON round trip. Parsing validates the document and recomputes any summary. */
ebi_status ebi_labeling_parse(const char* json_text, ebi_labeling** out);
ebi_status ebi_labeling_serialize(const ebi_labeling* lab, int include_summary, char** out);

int ebi_labeling_m(const ebi_labeling* lab);
int ebi_labeling_n(const ebi_labeling* lab);
/* Label of the edge (row, col): 0 or 1, or -1 for coordinates off the graph. */
int ebi_labeling_cell(const ebi_labeling* lab, int row, int col);

ebi_status ebi_labeling_index(const ebi_labeling* lab, int* out);
/* (v_A(1)+v_B(1)) - (v_A(0)+v_B(0)), before taking the absolute value. */
ebi_status ebi_labeling_signed_diff(const ebi_labeling* lab, int* out);
ebi_status ebi_labeling_vertex_counts(const ebi_labeling* lab, int* va1, int* va0,
                                      int* va_unlabeled, int* vb1, int* vb0);
/* Degrees and induced label of one vertex; label is 1, 0, or -1 (unlabeled). */
ebi_status ebi_labeling_a_vertex(const ebi_labeling* lab, int row, int* deg1, int* deg0,
                                 int* label);
ebi_status ebi_labeling_b_vertex(const ebi_labeling* lab, int col, int* deg1, int* deg0,
                                 int* label);

/* Applies one switch in place. Fails if the named cells are not labeled 1
 * and 0 respectively; the labeling is unchanged on failure. */
ebi_status ebi_labeling_apply_switch(ebi_labeling* lab, ebi_switch_op op);

/* ---- index sets -------------------------------------------------------- */

size_t ebi_index_set_size(const ebi_index_set* set);
/* k-th smallest member, or -1 when k is out of range. */
int ebi_index_set_get(const ebi_index_set* set, size_t k);
int ebi_index_set_contains(const ebi_index_set* set, int value);
/* "{0..4}" for contiguous runs, "{0,2,5}" otherwise, "{}" when empty. */
ebi_status ebi_index_set_to_string(const ebi_index_set* set, char** out);
void ebi_index_set_free(ebi_index_set* set);

/* ---- closed form ------------------------------------------------------- */

/* The closed-form edge-balanced index set: {0} for n = 2, otherwise
 * {0, ..., max} with max depending on q and r. */
ebi_status ebi_theorem_ebi(const ebi_params* params, ebi_index_set** out);
ebi_status ebi_theorem_max_index(const ebi_params* params, int* out);

/* Certifies that the ranges grown from the two constructions meet. Requires
 * n >= 4. subcase (optional, may be NULL) receives the arithmetic case that
 * applied. */
ebi_status ebi_range_overlap_check(const ebi_params* params, int* holds, int* low_max,
                                   int* high_min, char** subcase);

/* ---- constructions and replay ------------------------------------------ */

/* Index set realized by building both start labelings and replaying their
 * switch schedules. */
ebi_status ebi_constructive_ebi(const ebi_params* params, ebi_index_set** out);

ebi_status ebi_trajectory_run(const ebi_params* params, ebi_construction which,
                              ebi_trajectory** out);
int ebi_trajectory_start_index(const ebi_trajectory* traj);
size_t ebi_trajectory_step_count(const ebi_trajectory* traj);
ebi_status ebi_trajectory_step(const ebi_trajectory* traj, size_t k, ebi_switch_op* op,
                               int* index_after);
ebi_status ebi_trajectory_achieved(const ebi_trajectory* traj, ebi_index_set** out);
ebi_status ebi_trajectory_start(const ebi_trajectory* traj, ebi_labeling** out);
ebi_status ebi_trajectory_finish(const ebi_trajectory* traj, ebi_labeling** out);
void ebi_trajectory_free(ebi_trajectory* traj);

/* ---- exhaustive oracles ------------------------------------------------ */

/* Defaults: cap 50000000 states, 1 thread, no column symmetry, both
 * parities. */
void ebi_search_config_default(ebi_search_config* out);

/* Exact index set over all edge-friendly labelings of K_{m,n}; any m, n >= 1
 * with m*n >= 2 within the documented size limits. config and stats may be
 * NULL. */
ebi_status ebi_oracle_canonical(int m, int n, const ebi_search_config* config,
                                ebi_search_stats* stats, ebi_index_set** out);
/* Subset-walk reference; limited to m*n <= 24. */
ebi_status ebi_oracle_naive(int m, int n, const ebi_search_config* config,
                            ebi_search_stats* stats, ebi_index_set** out);

/* 1 when the labeling's index belongs to the set, else 0. */
int ebi_spot_check(const ebi_labeling* lab, const ebi_index_set* set);

/* ---- errors and strings ------------------------------------------------ */

const char* ebi_status_name(ebi_status status);
/* Message for the last failing call on this thread; "" when none. */
const char* ebi_last_error(void);
void ebi_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EBI_H */
