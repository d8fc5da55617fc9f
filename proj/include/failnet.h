#ifndef FAILNET_H
#define FAILNET_H

/* failnet — failure identification engine for product-environment systems.
 *
 * C interface to the engine shared library. All functions operate on an
 * opaque project handle and return a failnet_status; on any non-OK status
 * failnet_last_error() holds a human-readable message until the next call
 * on the same handle. Strings returned through out-parameters are heap
 * allocated and must be released with failnet_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#define FAILNET_API __declspec(dllexport)
#else
#define FAILNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as CLI exit codes. */
typedef enum failnet_status {
  FAILNET_OK = 0,
  FAILNET_E_VALIDATION = 1, /* domain invariant violated */
  FAILNET_E_FORMAT = 2,     /* malformed or missing input */
  FAILNET_E_INTERNAL = 3    /* I/O, locking, unexpected */
} failnet_status;

typedef struct failnet_project failnet_project;

/* Decides whether a single update proposal is applied. Receives the proposal
 * id and its canonical JSON rendering; return nonzero to accept. A NULL
 * callback accepts everything. */
typedef int (*failnet_accept_fn)(const char *proposal_id,
                                 const char *proposal_json, void *user);

FAILNET_API const char *failnet_library_version(void);

/* ---- lifecycle ---------------------------------------------------- */

/* Opens a project rooted at `root` (need not exist yet; `failnet_kb_init`
 * scaffolds it). The handle is single-threaded. */
FAILNET_API failnet_status failnet_project_open(const char *root,
                                                failnet_project **out);
FAILNET_API void failnet_project_close(failnet_project *p);

FAILNET_API const char *failnet_last_error(const failnet_project *p);
FAILNET_API void failnet_string_free(char *s);

/* Freezes all generated timestamps to `iso8601` (reproducible outputs). */
FAILNET_API failnet_status failnet_set_fixed_time(failnet_project *p,
                                                  const char *iso8601);

/* ---- knowledge base ------------------------------------------------ */

FAILNET_API failnet_status failnet_kb_init(failnet_project *p);
FAILNET_API failnet_status failnet_kb_import(failnet_project *p,
                                             const char *path);
FAILNET_API failnet_status failnet_kb_export(failnet_project *p,
                                             const char *path);

/* Validates the stored knowledge base. `report_json` (optional) receives the
 * canonical validation report; FAILNET_E_VALIDATION when violations exist. */
FAILNET_API failnet_status failnet_kb_validate(failnet_project *p,
                                               char **report_json);

FAILNET_API failnet_status failnet_kb_add_element(
    failnet_project *p, const char *id, const char *kind, const char *name,
    const char *const *aliases, size_t n_aliases, const char *const *attr_keys,
    const char *const *attr_values, size_t n_attrs);

FAILNET_API failnet_status failnet_kb_link(failnet_project *p,
                                           const char *from, const char *to,
                                           const char *kind);

/* ---- scenarios ------------------------------------------------------ */

/* criticality <= 0 selects the configured default. */
FAILNET_API failnet_status failnet_scenario_build(
    failnet_project *p, const char *scenario_id, const char *name,
    const char *const *function_ids, size_t n_functions, int depth,
    int criticality);

/* scenario_id NULL validates every stored scenario. */
FAILNET_API failnet_status failnet_scenario_validate(failnet_project *p,
                                                     const char *scenario_id,
                                                     char **report_json);

/* ---- analysis and complaints ---------------------------------------- */

/* Derives potential failure records for one scenario into `out_path`
 * (NULL -> reports/potential-<scenario>.json). max_effect_hops <= 0 selects
 * the configured default. */
FAILNET_API failnet_status failnet_analyze(failnet_project *p,
                                           const char *scenario_id,
                                           int max_effect_hops,
                                           const char *out_path);

/* Runs the complaint pipeline over a corpus (one JSON object per line).
 * records_out NULL -> reports/actual-records.json,
 * details_out NULL -> reports/complaint-details.json. */
FAILNET_API failnet_status failnet_complaints_ingest(failnet_project *p,
                                                     const char *corpus_path,
                                                     const char *records_out,
                                                     const char *details_out);

/* Scores actual records against potential records. `scenario_id` (optional)
 * restricts potential records to one scenario. report_out NULL ->
 * reports/correspondence.json. */
FAILNET_API failnet_status failnet_correspond(failnet_project *p,
                                              const char *potential_path,
                                              const char *actual_path,
                                              const char *scenario_id,
                                              const char *report_out);

/* Runs improvement rounds until convergence or `max_rounds` (<= 0 selects the
 * configured default). summary_out NULL -> reports/improvement.json. */
FAILNET_API failnet_status failnet_improve(failnet_project *p,
                                           const char *corpus_path,
                                           int max_rounds,
                                           failnet_accept_fn accept, void *user,
                                           const char *summary_out);

/* ---- reports --------------------------------------------------------- */

/* Renders a stored report. `format` is "text" or "structured". */
FAILNET_API failnet_status failnet_report_render(failnet_project *p,
                                                 const char *report_path,
                                                 const char *format,
                                                 char **out_text);

#ifdef __cplusplus
}
#endif

#endif /* FAILNET_H */
