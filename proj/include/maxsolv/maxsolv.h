/* maxsolv: maximal connected solvable subgroups from a Satake/Tits index.
 *
 * Every function returns a maxsolv_status; on failure the message (and a
 * witness, when there is one) is available from maxsolv_last_error() /
 * maxsolv_last_witness() on the calling thread. Strings handed out through
 * char** parameters are owned by the caller and released with
 * maxsolv_string_free().
 */
#ifndef MAXSOLV_H
#define MAXSOLV_H

#include <stddef.h>

#if defined(_WIN32)
#define MAXSOLV_API __declspec(dllexport)
#else
#define MAXSOLV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum maxsolv_status {
  MAXSOLV_OK = 0,
  MAXSOLV_E_PARSE = 1,
  MAXSOLV_E_NOT_FINITE_TYPE = 2,
  MAXSOLV_E_NOT_SYMMETRIZABLE = 3,
  MAXSOLV_E_TAU_NOT_INVOLUTION = 4,
  MAXSOLV_E_TAU_NOT_AUTOMORPHISM = 5,
  MAXSOLV_E_TAU_BREAKS_COLORING = 6,
  MAXSOLV_E_CLOSED_MODE_NOT_SPLIT = 7,
  MAXSOLV_E_BAD_LABEL = 8,
  MAXSOLV_E_THETA_NOT_SUBSET = 9,
  MAXSOLV_E_NOT_ROOT_SYSTEM = 10,
  MAXSOLV_E_UNRECOGNIZED_INDEX = 11,
  MAXSOLV_E_MISSING_ORACLE = 12,
  MAXSOLV_E_NOT_ADMISSIBLE = 13,
  MAXSOLV_E_DIFFERENT_INDEX = 14,
  MAXSOLV_E_RANK_BOUND = 15,
  MAXSOLV_E_REALIZATION_INVALID = 16,
  MAXSOLV_E_NOT_ANISOTROPIC = 17,
  MAXSOLV_E_CATALOG = 18,
  MAXSOLV_E_IO = 19,
  MAXSOLV_E_ARGUMENT = 20,
  MAXSOLV_E_CERTIFICATION_FAILED = 21,
  MAXSOLV_E_INTERNAL = 22
} maxsolv_status;

typedef enum maxsolv_verdict {
  MAXSOLV_CONJUGATE = 0,
  MAXSOLV_NOT_CONJUGATE = 1,
  MAXSOLV_CONDITIONAL = 2
} maxsolv_verdict;

typedef struct maxsolv_index maxsolv_index;

/* Admissibility decision for field mode "oracle". theta is "a1,a3" or "-";
 * levi_type / levi_coloring describe the derived Levi ("A1+A1", "ww").
 * Return 1 (admissible), 0 (not admissible) or -1 (error). */
typedef int (*maxsolv_oracle_fn)(void *user, const char *theta, const char *levi_type,
                                 const char *levi_coloring);

MAXSOLV_API const char *maxsolv_version(void);
MAXSOLV_API const char *maxsolv_status_name(maxsolv_status status);
MAXSOLV_API const char *maxsolv_last_error(void);
MAXSOLV_API const char *maxsolv_last_witness(void);
MAXSOLV_API void maxsolv_string_free(char *s);

MAXSOLV_API maxsolv_status maxsolv_index_parse(const char *text, maxsolv_index **out);
MAXSOLV_API maxsolv_status maxsolv_index_load(const char *path, maxsolv_index **out);
MAXSOLV_API void maxsolv_index_free(maxsolv_index *idx);
MAXSOLV_API maxsolv_status maxsolv_index_set_oracle(maxsolv_index *idx, maxsolv_oracle_fn fn, void *user);
MAXSOLV_API maxsolv_status maxsolv_index_digest(const maxsolv_index *idx, char **out);
MAXSOLV_API maxsolv_status maxsolv_absolute_rank(const maxsolv_index *idx, size_t *out);
MAXSOLV_API maxsolv_status maxsolv_k_rank(const maxsolv_index *idx, size_t *out);

MAXSOLV_API maxsolv_status maxsolv_is_admissible(const maxsolv_index *idx, const char *theta, int *admissible);

/* Admissible Theta in the canonical order (|Theta|, then lexicographic). */
MAXSOLV_API maxsolv_status maxsolv_class_count(const maxsolv_index *idx, size_t *out);
MAXSOLV_API maxsolv_status maxsolv_class_at(const maxsolv_index *idx, size_t i, char **theta, int *dim_b);

/* slot1/slot2 name the anisotropic torus classes; NULL means unbound. */
MAXSOLV_API maxsolv_status maxsolv_conjugate(const maxsolv_index *idx, const char *theta1, const char *slot1,
                                             const char *theta2, const char *slot2, maxsolv_verdict *verdict);

/* Family of solvable subgroups containing an element whose semisimple part
 * has the given type. Fails with MAXSOLV_E_NOT_ADMISSIBLE for inconsistent
 * (non-admissible) types. */
MAXSOLV_API maxsolv_status maxsolv_membership(const maxsolv_index *idx, const char *type, char **theta, int *dim_b);

/* Full Lie-algebra certification; *certified = 1 when every check held. */
MAXSOLV_API maxsolv_status maxsolv_verify(const maxsolv_index *idx, int *certified);

/* Render a CLI report. idx may be NULL for "catalog". options is a
 * NULL-terminated list of "key=value" strings (theta, theta1, theta2,
 * slot1, slot2, realization). The report is produced even when the status is
 * MAXSOLV_E_CERTIFICATION_FAILED. */
MAXSOLV_API maxsolv_status maxsolv_report(const maxsolv_index *idx, const char *command,
                                          const char *const *options, int json, char **out);

#ifdef __cplusplus
}
#endif

#endif /* MAXSOLV_H */
