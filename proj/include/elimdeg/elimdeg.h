// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef ELIMDEG_ELIMDEG_H
#define ELIMDEG_ELIMDEG_H

// C interface to libelimdeg.
//
// Problems are opaque handles owned by the caller. Every call returns an
// elimdeg_status; on failure elimdeg_last_message() describes the error for
// the calling thread. Strings returned through `char** out` are allocated by
// the library and must be released with elimdeg_string_free().

#include <stddef.h>
#include <stdint.h>

#ifndef ELIMDEG_API
#if defined(ELIMDEG_BUILDING)
#define ELIMDEG_API __attribute__((visibility("default")))
#else
#define ELIMDEG_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct elimdeg_problem elimdeg_problem;

// Values match the exit codes of the elimdeg command.
typedef enum elimdeg_status {
  ELIMDEG_OK = 0,
  ELIMDEG_DEGENERATE = 1,      // degenerate input, shared factor, zero resultant
  ELIMDEG_PARSE_ERROR = 2,
  ELIMDEG_INTERNAL_ERROR = 3,  // invariant violation, backend mismatch
  ELIMDEG_USAGE_ERROR = 4,
} elimdeg_status;

typedef enum elimdeg_format {
  ELIMDEG_FORMAT_TEXT = 0,
  ELIMDEG_FORMAT_JSON = 1,
} elimdeg_format;

typedef enum elimdeg_mode {
  ELIMDEG_MODE_CONCRETE = 0,
  ELIMDEG_MODE_PATTERN = 1,
} elimdeg_mode;

typedef enum elimdeg_order {
  ELIMDEG_ORDER_Y = 0,
  ELIMDEG_ORDER_X = 1,
  ELIMDEG_ORDER_BOTH = 2,
} elimdeg_order;

typedef enum elimdeg_method {
  ELIMDEG_METHOD_AUTO = 0,
  ELIMDEG_METHOD_INTERP = 1,
  ELIMDEG_METHOD_BAREISS = 2,
  ELIMDEG_METHOD_BOTH = 3,
} elimdeg_method;

ELIMDEG_API const char* elimdeg_version(void);

// Message left by the most recent call on this thread: the error of a failed
// call, or a warning (often empty) after a successful one. Valid until the
// next call.
ELIMDEG_API const char* elimdeg_last_message(void);

// Source position of the last syntax error, 0 when there is none.
ELIMDEG_API size_t elimdeg_last_error_line(void);
ELIMDEG_API size_t elimdeg_last_error_column(void);

ELIMDEG_API elimdeg_status elimdeg_problem_parse(const char* text, size_t length,
                                                 elimdeg_problem** out);
ELIMDEG_API elimdeg_status elimdeg_problem_load(const char* path,
                                                elimdeg_problem** out);
ELIMDEG_API void elimdeg_problem_free(elimdeg_problem* problem);

ELIMDEG_API elimdeg_mode elimdeg_problem_mode(const elimdeg_problem* problem);

// Nonzero when concrete coefficients were absorbed into a pattern problem.
ELIMDEG_API int elimdeg_problem_mixed(const elimdeg_problem* problem);

// Canonical problem text.
ELIMDEG_API elimdeg_status elimdeg_problem_print(const elimdeg_problem* problem,
                                                 char** out);

// `eliminate` is a variable name or one of the role letters "x" / "y".
ELIMDEG_API elimdeg_status elimdeg_minding_degree(const elimdeg_problem* problem,
                                                  const char* eliminate,
                                                  int64_t* degree);

// With ELIMDEG_ORDER_BOTH an order whose variable does not occur in both
// polynomials is left out (with a warning) as long as the other succeeds.
ELIMDEG_API elimdeg_status elimdeg_analyze(const elimdeg_problem* problem,
                                           elimdeg_order order,
                                           elimdeg_format format, char** out);

// Concrete problems only.
ELIMDEG_API elimdeg_status elimdeg_resultant(const elimdeg_problem* problem,
                                             const char* eliminate,
                                             elimdeg_method method,
                                             elimdeg_format format, char** out);

ELIMDEG_API elimdeg_status elimdeg_verify(const elimdeg_problem* problem,
                                          const char* eliminate, int trials,
                                          uint64_t seed, uint64_t coeff_bound,
                                          elimdeg_format format, char** out);

ELIMDEG_API elimdeg_status elimdeg_infinity(const elimdeg_problem* problem,
                                            int genericize_theta,
                                            elimdeg_format format, char** out);

ELIMDEG_API void elimdeg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif  // ELIMDEG_ELIMDEG_H
