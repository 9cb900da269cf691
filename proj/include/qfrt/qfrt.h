/* Copyright 2026 The qfrt Authors
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
#ifndef QFRT_QFRT_H
#define QFRT_QFRT_H

#include <stddef.h>

#if defined(QFRT_BUILDING_LIBRARY)
#define QFRT_API __attribute__((visibility("default")))
#else
#define QFRT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every function that can fail. */
typedef enum qfrt_status {
  QFRT_OK = 0,
  QFRT_ERR_INVALID_ARGUMENT = 1, /* null pointer or unknown option */
  QFRT_ERR_INPUT = 2,            /* malformed document or presentation */
  QFRT_ERR_INTERNAL = 3
} qfrt_status;

/* Verdicts of qfrt_presentation_ideal_equals. */
typedef enum qfrt_answer { QFRT_YES = 0, QFRT_NO = 1, QFRT_UNKNOWN = 2 } qfrt_answer;

typedef struct qfrt_report qfrt_report;
typedef struct qfrt_presentation qfrt_presentation;

typedef struct qfrt_run_options {
  int max_deg;        /* 0 keeps the document option or the default bound */
  const char* expect; /* contents of an expected relation list, or NULL */
  const char* phi;    /* contents of a matrix document (hev), or NULL */
} qfrt_run_options;

QFRT_API const char* qfrt_version(void);

/* Message of the last failed call on this thread; never NULL. */
QFRT_API const char* qfrt_last_error(void);

/* Runs a subcommand on a JSON document. A report is produced for every
 * document, including malformed ones; only null arguments fail. `options`
 * may be NULL. */
QFRT_API qfrt_status qfrt_run(const char* subcommand, const char* input, const qfrt_run_options* options,
                              qfrt_report** out);
/* 0 pass, 1 refuted, 2 unknown at the degree bound, 64 input error,
 * 70 internal error. */
QFRT_API int qfrt_report_exit_code(const qfrt_report* report);
/* Rendered report; free with qfrt_string_free. */
QFRT_API char* qfrt_report_json(const qfrt_report* report, int with_timing);
QFRT_API char* qfrt_report_text(const qfrt_report* report, int with_timing);
QFRT_API void qfrt_report_free(qfrt_report* report);

/* Canonical presentation text ("qfrt-presentation 1" header). */
QFRT_API qfrt_status qfrt_presentation_parse(const char* text, qfrt_presentation** out);
QFRT_API char* qfrt_presentation_serialize(const qfrt_presentation* p);
QFRT_API size_t qfrt_presentation_relation_count(const qfrt_presentation* p);
/* Ideal equality; max_deg <= 0 uses the default bound. */
QFRT_API qfrt_status qfrt_presentation_ideal_equals(const qfrt_presentation* a, const qfrt_presentation* b,
                                                     int max_deg, qfrt_answer* out);
QFRT_API void qfrt_presentation_free(qfrt_presentation* p);

QFRT_API void qfrt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QFRT_QFRT_H */
