/*
 * C interface to the tpline library.
 *
 * Every entry point returns a tpl_status and, when `out` is non-null,
 * hands back a report that owns its rendered output and diagnostic
 * message. Reports are released with tpl_report_free. Inputs are JSON
 * documents in the formats described in docs/formats.md.
 */
#ifndef TPLINE_H
#define TPLINE_H

#include <stdint.h>

#if defined(_WIN32)
#define TPL_API __declspec(dllexport)
#else
#define TPL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tpl_status {
  TPL_OK = 0,
  TPL_ERR_INTERNAL = 1,
  TPL_ERR_INPUT = 2,
  TPL_ERR_HYPOTHESIS = 3,
  TPL_ERR_DEGENERATE = 4
} tpl_status;

typedef enum tpl_format { TPL_FORMAT_JSON = 0, TPL_FORMAT_TEXT = 1 } tpl_format;

typedef struct tpl_report tpl_report;

/* Total positivity of a configuration {"blocks": [...]} or a square matrix
 * {"X": [[...]]}. A failing check returns TPL_ERR_HYPOTHESIS with the
 * witness in the report. */
TPL_API tpl_status tpl_check_tp(const char* input_json, tpl_report** out);

/* Loewner-Whitney parameters of {"X": [[...]]}. */
TPL_API tpl_status tpl_factor(const char* input_json, tpl_report** out);

/* The two transversal lines of a configuration {"blocks": [...]}. */
TPL_API tpl_status tpl_solve(const char* config_json, tpl_report** out);

TPL_API tpl_status tpl_verify_identity(uint32_t spots, uint64_t seed,
                                       tpl_report** out);

/* curve_json may be NULL for the rational normal curve. ts_csv holds four
 * rationals "t1,t3,t5,t7"; epsilon is "auto" or a rational. */
TPL_API tpl_status tpl_curve_sample(const char* curve_json, const char* ts_csv,
                                    const char* epsilon, tpl_report** out);

TPL_API tpl_status tpl_schubert_count(int k, int n, tpl_report** out);

TPL_API tpl_status tpl_random_instance(uint64_t seed, uint32_t bound,
                                       tpl_report** out);

/* Output in the requested format; owned by the report. Empty when the call
 * failed before producing a result. */
TPL_API const char* tpl_report_render(tpl_report* report, tpl_format format);

/* Diagnostic message (empty on success). Owned by the report. */
TPL_API const char* tpl_report_message(const tpl_report* report);

TPL_API void tpl_report_free(tpl_report* report);

TPL_API const char* tpl_status_name(tpl_status status);

TPL_API const char* tpl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TPLINE_H */
