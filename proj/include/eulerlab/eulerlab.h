#ifndef EULERLAB_EULERLAB_H
#define EULERLAB_EULERLAB_H

/* C interface of the eulerlab verification library. Handles are opaque; every
   fallible call returns an eul_status and leaves a message retrievable with
   eul_last_error() on the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#define EUL_API __declspec(dllexport)
#else
#define EUL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eul_status {
  EUL_OK = 0,
  EUL_ERR_DOMAIN = 1,
  EUL_ERR_PARAM = 2,
  EUL_ERR_VARIANT = 3,
  EUL_ERR_MISSING_FIELD = 4,
  EUL_ERR_UNSUPPORTED_FORM = 5,
  EUL_ERR_NO_CONVERGENCE = 6,
  EUL_ERR_STEP = 7,
  EUL_ERR_FOOT_OUTSIDE_DOMAIN = 8,
  EUL_ERR_CFL_VIOLATION = 9,
  EUL_ERR_DEGENERATE_FIT = 10,
  EUL_ERR_CONFIG = 11,
  EUL_ERR_PARSE = 12,
  EUL_ERR_OVERFLOW = 13,
  EUL_ERR_NULL_ARGUMENT = 14,
  EUL_ERR_INTERNAL = 15
} eul_status;

typedef enum eul_variant {
  EUL_EULER_SELFSIMILAR = 0,
  EUL_NS_INVERSE_R = 1,
  EUL_NS_DECAYING_SWIRL = 2
} eul_variant;

typedef struct eul_params {
  double a;
  double k;
  double t_star;
  double nu;
  eul_variant variant;
} eul_params;

typedef struct eul_config eul_config;
typedef struct eul_result eul_result;

EUL_API const char* eul_version(void);
EUL_API const char* eul_status_name(eul_status status);
/* Message of the last failure on this thread; empty after a success. */
EUL_API const char* eul_last_error(void);

/* Defaults: a = k = t_star = 1, nu = 0, Euler family. */
EUL_API eul_params eul_params_default(void);

/* Velocity (vr, vtheta, vz) at (t, r, z). */
EUL_API eul_status eul_eval_cyl(const eul_params* p, double t, double r, double z,
                                double out[3]);
/* Cartesian velocity at (t, x1, x2, x3). */
EUL_API eul_status eul_eval_cart(const eul_params* p, double t, double x1, double x2, double x3,
                                 double out[3]);
/* Pressure gauged so that P(t, r = 1, z = 0) = 0. */
EUL_API eul_status eul_pressure(const eul_params* p, double t, double r, double z, double* out);
/* Largest component of a named residual (e.g. "SwirlTransport") at a point. */
EUL_API eul_status eul_residual(const eul_params* p, const char* equation, double t, double r,
                                double z, double* out);

/* Run configuration: flat string keys, see eul_config_key_name. */
EUL_API eul_status eul_config_new(eul_config** out);
EUL_API void eul_config_free(eul_config* config);
EUL_API eul_status eul_config_set(eul_config* config, const char* key, const char* value);
EUL_API eul_status eul_config_load_file(eul_config* config, const char* path);
EUL_API eul_status eul_config_validate(const eul_config* config);
EUL_API size_t eul_config_key_count(void);
EUL_API const char* eul_config_key_name(size_t index);
EUL_API const char* eul_config_key_help(size_t index);

/* Runs "verify", "derive", "trace", "simulate", "diagnose" or "all". A
   result is produced whenever the configuration is usable, even if checks
   fail; see eul_result_pass. */
EUL_API eul_status eul_run(const eul_config* config, const char* command, eul_result** out);
EUL_API int eul_result_pass(const eul_result* result);
EUL_API const char* eul_result_report_json(const eul_result* result);
EUL_API const char* eul_result_summary(const eul_result* result);
EUL_API size_t eul_result_file_count(const eul_result* result);
EUL_API const char* eul_result_file(const eul_result* result, size_t index);
EUL_API void eul_result_free(eul_result* result);

#ifdef __cplusplus
}
#endif

#endif
