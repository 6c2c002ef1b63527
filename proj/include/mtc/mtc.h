/* Copyright 2026 The mtc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MTC_MTC_H_
#define MTC_MTC_H_

#include <stdint.h>

#if defined(MTC_BUILDING_LIBRARY)
#define MTC_API __attribute__((visibility("default")))
#else
#define MTC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Return codes. Values 1..15 mirror the library's error kinds. */
typedef enum mtc_status {
  MTC_OK = 0,
  MTC_ERR_PARSE = 1,
  MTC_ERR_MISSING_SECTION = 2,
  MTC_ERR_INVALID_DATA = 3,
  MTC_ERR_UNKNOWN_BUILTIN = 4,
  MTC_ERR_NOT_MODULAR = 5,
  MTC_ERR_SNAP_FAILURE = 6,
  MTC_ERR_RELATION_FAILURE = 7,
  MTC_ERR_SHAPE_MISMATCH = 8,
  MTC_ERR_POSITION_OUT_OF_RANGE = 9,
  MTC_ERR_TRACE_ON_NON_ENDOMORPHISM = 10,
  MTC_ERR_RANK_OVERFLOW = 11,
  MTC_ERR_WRONG_LEVELS = 12,
  MTC_ERR_XI_NOT_ZERO_ONE = 13,
  MTC_ERR_NOT_PREMODULAR = 14,
  MTC_ERR_INVALID_ARGUMENT = 15,
  MTC_ERR_NULL_ARGUMENT = 100,
  MTC_ERR_INTERNAL = 101
} mtc_status;

typedef struct mtc_category mtc_category;
typedef struct mtc_suite_result mtc_suite_result;

typedef struct mtc_suite_options {
  int n_min;
  int n_max; /* inclusive */
  double tol;
  double frobenius_tol;
  /* Comma-separated stage names, or NULL for all stages. */
  const char *suites;
  uint64_t seed;
} mtc_suite_options;

typedef struct mtc_compute_args {
  const char *i, *j, *k, *l; /* label names or indices, may be NULL */
  const char *perm;          /* cycle notation, NULL means "(1 2)" */
  int arity;                 /* 0 picks the smallest arity holding perm */
  int m;
  int json;
} mtc_compute_args;

MTC_API const char *mtc_version(void);
/* Message of the last failed call on this thread, or "". */
MTC_API const char *mtc_last_error(void);
MTC_API const char *mtc_status_name(int status);

/* Strings returned through char ** are owned by the caller. */
MTC_API void mtc_string_free(char *s);

/* Newline-separated built-in names. */
MTC_API int mtc_list_builtins(char **out);

MTC_API int mtc_category_builtin(const char *name, mtc_category **out);
MTC_API int mtc_category_from_string(const char *text, mtc_category **out);
/* Built-in name, else path to a category file. */
MTC_API int mtc_category_resolve(const char *target, mtc_category **out);
MTC_API void mtc_category_free(mtc_category *cat);
MTC_API int mtc_category_rank(const mtc_category *cat, int *out);
MTC_API int mtc_category_serialize(const mtc_category *cat, char **out);

/* Defaults, with tol taken from MTC_TOL when set. Fails when MTC_TOL is
 * malformed, leaving the built-in defaults in opts. */
MTC_API int mtc_suite_options_default(mtc_suite_options *opts);
/* opts may be NULL for defaults. */
MTC_API int mtc_run_suite(const char *target, const mtc_suite_options *opts, mtc_suite_result **out);
MTC_API int mtc_run_suite_category(const mtc_category *cat, const char *target_name,
                                   const mtc_suite_options *opts, mtc_suite_result **out);
MTC_API void mtc_suite_result_free(mtc_suite_result *res);
/* 0 iff no check failed. */
MTC_API int mtc_suite_result_exit_code(const mtc_suite_result *res);
MTC_API int mtc_suite_result_json(const mtc_suite_result *res, int timings, char **out);
MTC_API int mtc_suite_result_text(const mtc_suite_result *res, char **out);
/* Name of the first failing check, or NULL when every check passed. */
MTC_API int mtc_suite_result_first_failure(const mtc_suite_result *res, char **out);

MTC_API void mtc_compute_args_default(mtc_compute_args *args);
/* command: xi, z, annulus, multifold or modular-data. */
MTC_API int mtc_compute(const char *command, const char *target, const mtc_compute_args *args, char **out);

#ifdef __cplusplus
}
#endif

#endif /* MTC_MTC_H_ */
