/* Copyright cartan-spinors contributors.
 * SPDX-License-Identifier: Apache-2.0 */

#ifndef CARTAN_CARTAN_H
#define CARTAN_CARTAN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CARTAN_API __declspec(dllexport)
#else
#define CARTAN_API __attribute__((visibility("default")))
#endif

/* Status codes. Values 1..12 mirror the library's error categories. */
typedef enum cartan_status {
  CARTAN_OK = 0,
  CARTAN_ERR_SIZE = 1,
  CARTAN_ERR_ALGEBRA_MISMATCH = 2,
  CARTAN_ERR_REPRESENTATION_KIND = 3,
  CARTAN_ERR_DIMENSION_MISMATCH = 4,
  CARTAN_ERR_TANGENCY = 5,
  CARTAN_ERR_FRAME = 6,
  CARTAN_ERR_DEGREE_BOUND = 7,
  CARTAN_ERR_ZERO_SPINOR = 8,
  CARTAN_ERR_OVERFLOW = 9,
  CARTAN_ERR_IO = 10,
  CARTAN_ERR_USAGE = 11,
  CARTAN_ERR_NUMERIC = 12,
  CARTAN_ERR_INTERNAL = 13
} cartan_status;

typedef struct cartan_config {
  int n;               /* sphere dimension, 1..7 */
  int m;               /* degree bound, 0..6 */
  const char* space;   /* "sphere", "rp_plus", "rp_minus" */
  const char* suite;   /* "clifford", "bundle", "curvature", "lichnerowicz", "killing", "splitting", "all" */
  const char* mode;    /* "exact" or "float" */
  int samples;         /* >= 1 */
  uint64_t seed;
} cartan_config;

typedef struct cartan_session cartan_session;

/* n=3, m=2, sphere, all, exact, 100 samples, seed 1. */
CARTAN_API void cartan_config_default(cartan_config* config);

/* Validates and copies the config. On failure *out is NULL. */
CARTAN_API cartan_status cartan_session_create(const cartan_config* config, cartan_session** out);
CARTAN_API void cartan_session_destroy(cartan_session* session);

/* Runs the configured suite; *all_pass receives 1 or 0. The session keeps
 * the report for cartan_report. */
CARTAN_API cartan_status cartan_verify(cartan_session* session, int* all_pass);

/* Computes the spectrum of D on `space` (NULL: the configured space) at the
 * configured degree bound and keeps the table. */
CARTAN_API cartan_status cartan_spectrum(cartan_session* session, const char* space);

/* Adds a previously emitted verify/spectrum/report JSON document. */
CARTAN_API cartan_status cartan_add_result_json(cartan_session* session, const char* json);

/* Bundles everything gathered so far into one report. With recompute != 0
 * the configured suite and all three spectra are computed first; without it
 * an empty session is a usage error. *all_pass reflects the bundled checks. */
CARTAN_API cartan_status cartan_report(cartan_session* session, int recompute, int* all_pass);

/* JSON / text rendering of the last successful call. Owned by the session,
 * valid until the next call on it. */
CARTAN_API const char* cartan_result_json(const cartan_session* session);
CARTAN_API const char* cartan_result_text(const cartan_session* session);

/* Message of the last failing call on the session ("" if none). With NULL,
 * the message of the last failed cartan_session_create on this thread. */
CARTAN_API const char* cartan_last_error(const cartan_session* session);

CARTAN_API const char* cartan_status_string(cartan_status status);
CARTAN_API const char* cartan_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CARTAN_CARTAN_H */
