#ifndef EPLAB_H
#define EPLAB_H

/* C interface to the plasma Euler-Poisson laboratory. All entry points
 * are exception-free: failures come back as status codes and the
 * thread-local message from eplab_last_error(). Handles are opaque and
 * owned by the caller through the matching free function. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eplab_status {
  EPLAB_OK = 0,
  EPLAB_ERR_CONFIG = 1,           /* invalid configuration, all violations in last_error */
  EPLAB_ERR_DOMAIN = 2,           /* argument outside a mathematical domain */
  EPLAB_ERR_PRECONDITION = 3,     /* documented precondition violated */
  EPLAB_ERR_COMPATIBILITY = 4,    /* Neumann right-hand side not mean-free */
  EPLAB_ERR_NONCONVERGENCE = 5,   /* iterative solve exhausted its budget */
  EPLAB_ERR_TIMESTEP_COLLAPSE = 6,/* stable step shrank below representable */
  EPLAB_ERR_VACUUM = 7,           /* density floor dominated the run */
  EPLAB_ERR_IO = 8,               /* file or directory failure */
  EPLAB_ERR_INVALID_ARGUMENT = 9, /* null handle / null pointer / bad name */
  EPLAB_ERR_INTERNAL = 10         /* anything not covered above */
} eplab_status;

typedef struct eplab_config eplab_config;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* eplab_version(void);

/* Short name for a status code. Static storage; do not free. */
const char* eplab_status_name(eplab_status status);

/* Message describing the last failure on this thread, or "" if the last
 * call succeeded. Static thread-local storage; do not free. */
const char* eplab_last_error(void);

/* Builds a config with documented defaults (system = bep). */
eplab_status eplab_config_default(eplab_config** out);

/* Parses key = value text ('#' comments). 'system' is required. */
eplab_status eplab_config_parse_string(const char* text, eplab_config** out);
eplab_status eplab_config_parse_file(const char* path, eplab_config** out);

/* Applies one key = value override, revalidating the whole config. */
eplab_status eplab_config_set(eplab_config* cfg, const char* key,
                              const char* value);

/* Copies the resolved value of one key into buf (NUL-terminated,
 * truncated to len). */
eplab_status eplab_config_get(const eplab_config* cfg, const char* key,
                              char* buf, size_t len);

void eplab_config_free(eplab_config* cfg);

/* Integrates the configured system from well-prepared data to t_end and
 * writes fields_initial.csv, fields_final.csv, energy.csv into
 * output_dir (NULL keeps the config's output_dir). */
eplab_status eplab_run(const eplab_config* cfg, const char* output_dir);

/* Runs the limit sweep ("zem" or "joint"), writes the sweep CSV and one
 * relative-energy series CSV per entry, and reports the fitted rate.
 * slope/r2 may be NULL. summary (may be NULL) receives a NUL-terminated
 * text block, truncated to summary_len. */
eplab_status eplab_sweep(const eplab_config* cfg, const char* limit,
                         const char* output_dir, double* slope, double* r2,
                         char* summary, size_t summary_len);

/* Runs one verification suite: "mms", "ibp", "energy",
 * "releng-identity", "leading-order", or "all". *passed is 1 iff every
 * executed check passed. report (may be NULL) receives the pass/fail
 * lines with measurements, truncated to report_len. */
eplab_status eplab_verify(const eplab_config* cfg, const char* check,
                          int* passed, char* report, size_t report_len);

#ifdef __cplusplus
}
#endif

#endif /* EPLAB_H */
