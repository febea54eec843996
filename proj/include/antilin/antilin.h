#ifndef ANTILIN_H
#define ANTILIN_H

/*
 * C interface to the antilin library.
 *
 * Conventions:
 *   - Every fallible call returns an al_status; AL_OK is zero. On failure the
 *     message of the most recent error on the calling thread is available
 *     from al_last_error() until the next failing call on that thread.
 *   - Objects are opaque handles created by *_create / *_from_* functions and
 *     released with the matching *_free function. Free functions accept NULL.
 *   - Strings returned through char** are heap allocated; release them with
 *     al_string_free().
 *   - Complex arrays are interleaved (re, im) doubles; lengths count complex
 *     entries. Matrices are row-major.
 *   - Handles are immutable after creation and may be shared between threads.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ANTILIN_BUILDING_LIBRARY)
#define AL_API __attribute__((visibility("default")))
#else
#define AL_API
#endif

typedef enum al_status {
  AL_OK = 0,
  AL_ERR_NON_FINITE = 1,
  AL_ERR_DIM_MISMATCH = 2,
  AL_ERR_NOT_HERMITIAN = 3,
  AL_ERR_NOT_POSITIVE = 4,
  AL_ERR_NOT_UNIT = 5,
  AL_ERR_NOT_ISOMETRY = 6,
  AL_ERR_NOT_ORTHONORMAL = 7,
  AL_ERR_FACTORIZATION_FAILURE = 8,
  AL_ERR_ODD_PARITY = 9,
  AL_ERR_MIXED_PARITY = 10,
  AL_ERR_DIM_TOO_LARGE = 11,
  AL_ERR_NOT_SEPARATING = 12,
  AL_ERR_PARSE = 13,
  AL_ERR_TOLERANCE_EXCEEDED = 14,
  AL_ERR_INVALID_ARGUMENT = 15,
  AL_ERR_NULL_ARGUMENT = 16,
  AL_ERR_INTERNAL = 17
} al_status;

typedef struct al_state al_state;       /* vector in H_a (x) H_b */
typedef struct al_teleport al_teleport; /* teleportation map t^{ca} */

typedef struct al_verify_config {
  uint64_t seed;
  const size_t* dims; /* candidate subsystem dimensions */
  size_t n_dims;
  double tolerance;
  int trials;
  int threads;
} al_verify_config;

AL_API const char* al_version(void);
AL_API const char* al_status_name(al_status status);
AL_API const char* al_last_error(void);
/* Process exit code for a status: 0 success, 2 invalid input, 3 numerical
 * tolerance failure, 1 internal error. */
AL_API int al_exit_code(al_status status);
AL_API void al_string_free(char* s);

/* States. */
AL_API al_status al_state_from_json(const char* json_text, al_state** out);
AL_API al_status al_state_from_coeff(size_t dim_a, size_t dim_b, const double* coeff, al_state** out);
AL_API al_status al_state_maximally_entangled(size_t d, al_state** out);
/* i.i.d. complex normal coefficients, normalized; deterministic per
 * (dims, seed). completely_entangled != 0 resamples until both reductions
 * have full rank and requires dim_a == dim_b. */
AL_API al_status al_state_random(size_t dim_a, size_t dim_b, uint64_t seed, int completely_entangled,
                                 al_state** out);
AL_API void al_state_free(al_state* state);
AL_API al_status al_state_dims(const al_state* state, size_t* dim_a, size_t* dim_b);
AL_API al_status al_state_norm(const al_state* state, double* out);
/* Copies dim_a * dim_b complex coefficients; len must equal that count. */
AL_API al_status al_state_coeff(const al_state* state, double* coeff, size_t len);
AL_API al_status al_state_to_json(const al_state* state, char** out);

/* Teleportation maps. */
AL_API al_status al_teleport_create(const al_state* psi_ab, const al_state* phi_bc, al_teleport** out);
AL_API void al_teleport_free(al_teleport* tm);
AL_API al_status al_teleport_dims(const al_teleport* tm, size_t* dim_a, size_t* dim_c);
/* out = t * in, no renormalization. */
AL_API al_status al_teleport_apply(const al_teleport* tm, const double* in, size_t in_len, double* out,
                                   size_t out_len);
/* Requires unit psi_ab and phi_bc. Any output pointer may be NULL. */
AL_API al_status al_teleport_bounds(const al_teleport* tm, double* success_bound, double* trace_norm,
                                    double* fidelity);

/* Reports. command is one of "epr", "teleport", "luders", "chain",
 * "modular". On AL_OK or AL_ERR_TOLERANCE_EXCEEDED both outputs are set;
 * out_summary may be NULL. */
AL_API al_status al_report(const char* command, const char* input_json, double tolerance, char** out_json,
                           char** out_summary);

AL_API al_verify_config al_verify_defaults(void);
/* Same output contract as al_report. */
AL_API al_status al_verify(const al_verify_config* config, char** out_json, char** out_summary);

#ifdef __cplusplus
}
#endif

#endif /* ANTILIN_H */
