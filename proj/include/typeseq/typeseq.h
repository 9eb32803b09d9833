#ifndef TYPESEQ_TYPESEQ_H
#define TYPESEQ_TYPESEQ_H

/*
 * C interface to the typeseq library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns a tsq_status; on failure the
 * thread's last error message is available from tsq_last_error().
 * Strings returned through `const char**` stay valid until the owning handle
 * is freed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(TYPESEQ_BUILDING_LIBRARY)
#define TSQ_API __attribute__((visibility("default")))
#else
#define TSQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TSQ_OK = 0,
  TSQ_INVALID_ARGUMENT = 1,
  TSQ_PARSE = 2,
  TSQ_FIELD = 3,
  TSQ_RING = 4,
  TSQ_CONDUCTOR_NOT_FOUND = 5,
  TSQ_INCONSISTENT = 6,
  TSQ_IO = 7,
  TSQ_INTERNAL = 8
} tsq_status;

enum {
  TSQ_EMIT_DUALS = 1,
  TSQ_EMIT_GSR = 2,
  TSQ_COMPARE_GSR = 4,
  TSQ_RUN_SUITE = 8
};

typedef struct tsq_document tsq_document;
typedef struct tsq_report tsq_report;

typedef struct {
  uint64_t seed;
  size_t count;
  size_t max_n;
  size_t max_N;
  const char* mode; /* "gsr", "generated" or "both"; NULL means "both" */
} tsq_fuzz_params;

TSQ_API const char* tsq_version(void);
/* Message of the last failed call on this thread, "" if none. */
TSQ_API const char* tsq_last_error(void);
TSQ_API const char* tsq_status_name(tsq_status status);

TSQ_API tsq_status tsq_document_parse(const char* json, tsq_document** out);
TSQ_API tsq_status tsq_document_load(const char* path, tsq_document** out);
TSQ_API tsq_status tsq_document_set_max_degree_cap(tsq_document* doc, size_t cap);
TSQ_API void tsq_document_free(tsq_document* doc);

TSQ_API tsq_status tsq_analyze(const tsq_document* doc, unsigned flags, tsq_report** out);
/* Invariant suite only; the report's failure count is the number of failed checks. */
TSQ_API tsq_status tsq_check(const tsq_document* doc, tsq_report** out);
TSQ_API tsq_status tsq_fuzz(const tsq_fuzz_params* params, tsq_report** out);
TSQ_API tsq_status tsq_semigroup_oracle(const size_t* generators, size_t count, tsq_report** out);

TSQ_API tsq_status tsq_report_json(const tsq_report* report, const char** json);
TSQ_API tsq_status tsq_report_failures(const tsq_report* report, size_t* failures);
/* Copies up to `capacity` entries into `values`; `length` receives the full length. */
TSQ_API tsq_status tsq_report_type_sequence(const tsq_report* report, size_t* values, size_t capacity,
                                            size_t* length);
TSQ_API tsq_status tsq_report_n_list(const tsq_report* report, size_t* values, size_t capacity, size_t* length);
TSQ_API tsq_status tsq_report_conductor(const tsq_report* report, size_t* conductor);
TSQ_API tsq_status tsq_report_label(const tsq_report* report, const char** label);
TSQ_API void tsq_report_free(tsq_report* report);

#ifdef __cplusplus
}
#endif

#endif
