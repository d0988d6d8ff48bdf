/*
 * colfan.h - C interface to the colored-fan toolkit.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a colfan_status; on failure the
 * thread-local message from colfan_last_error() describes the problem.
 */
#ifndef COLFAN_COLFAN_H
#define COLFAN_COLFAN_H

#include <stddef.h>

#if defined(_WIN32)
#define COLFAN_API __declspec(dllexport)
#else
#define COLFAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum colfan_status {
  COLFAN_OK = 0,
  COLFAN_E_INVALID_ARGUMENT = 1, /* null handle or pointer */
  COLFAN_E_INPUT = 2,            /* unreadable file, schema or semantic violation */
  COLFAN_E_INTERNAL = 3
} colfan_status;

typedef struct colfan_datum colfan_datum;
typedef struct colfan_fan colfan_fan;
typedef struct colfan_action colfan_action;
typedef struct colfan_report colfan_report;

/* Paths and options for colfan_run_command; unused members may be NULL. */
typedef struct colfan_inputs {
  const char* datum_path;
  const char* fan_path;
  const char* action_path;
  const char* morphism_path;
  const char* target_datum_path;
  const char* target_fan_path;
  const char* lambda_csv;
  const char* theta_path;
  int force_lp;
} colfan_inputs;

COLFAN_API const char* colfan_version(void);
COLFAN_API const char* colfan_last_error(void);
COLFAN_API void colfan_string_free(char* s);

/* Spherical data. */
COLFAN_API colfan_status colfan_datum_load(const char* path, colfan_datum** out);
COLFAN_API colfan_status colfan_datum_parse(const char* json, colfan_datum** out);
COLFAN_API size_t colfan_datum_dim(const colfan_datum* datum);
COLFAN_API size_t colfan_datum_num_colors(const colfan_datum* datum);
COLFAN_API colfan_status colfan_datum_serialize(const colfan_datum* datum, char** out);
COLFAN_API void colfan_datum_free(colfan_datum* datum);

/* Fans are given by their maximal cones; the face closure is formed by the checks. */
COLFAN_API colfan_status colfan_fan_load(const colfan_datum* datum, const char* path, colfan_fan** out);
COLFAN_API colfan_status colfan_fan_parse(const colfan_datum* datum, const char* json, colfan_fan** out);
COLFAN_API size_t colfan_fan_num_cones(const colfan_fan* fan);
COLFAN_API colfan_status colfan_fan_serialize(const colfan_fan* fan, char** out);
COLFAN_API void colfan_fan_free(colfan_fan* fan);

/* Group actions are validated on load (lattice automorphisms, equivariance, V-stability). */
COLFAN_API colfan_status colfan_action_load(const colfan_datum* datum, const char* path, colfan_action** out);
COLFAN_API colfan_status colfan_action_parse(const colfan_datum* datum, const char* json, colfan_action** out);
COLFAN_API size_t colfan_action_order(const colfan_action* action);
COLFAN_API void colfan_action_free(colfan_action* action);

/* Checks. A report is produced for every call that returns COLFAN_OK. */
COLFAN_API colfan_status colfan_check_validate(const colfan_datum* datum, const colfan_fan* fan,
                                               colfan_report** out);
COLFAN_API colfan_status colfan_check_quasiproj(const colfan_datum* datum, const colfan_fan* fan,
                                                colfan_report** out);
COLFAN_API colfan_status colfan_check_kform(const colfan_datum* datum, const colfan_fan* fan,
                                            const colfan_action* action, colfan_report** out);
COLFAN_API colfan_status colfan_check_monoid(const colfan_datum* datum, const colfan_fan* fan,
                                             colfan_report** out);

/*
 * Runs one of: validate, quasiproj, kform, monoid, monoid-kform, morphism,
 * lined. Always sets *out when out is non-NULL; input problems yield a report
 * with exit code 2 and status COLFAN_E_INPUT.
 */
COLFAN_API colfan_status colfan_run_command(const char* command, const colfan_inputs* inputs,
                                            colfan_report** out);

/* 1 when the check passed, 0 otherwise. */
COLFAN_API int colfan_report_verdict(const colfan_report* report);
/* 0 passed, 1 failed, 2 input error. */
COLFAN_API int colfan_report_exit_code(const colfan_report* report);
COLFAN_API const char* colfan_report_text(const colfan_report* report);
COLFAN_API const char* colfan_report_json(const colfan_report* report);
COLFAN_API void colfan_report_free(colfan_report* report);

#ifdef __cplusplus
}
#endif

#endif /* COLFAN_COLFAN_H */
