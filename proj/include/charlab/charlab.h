/* charlab — exact character theory of finite groups.
 *
 * C interface to the engine: opaque handles, status codes, and rendered
 * reports. All functions are thread-safe as long as each handle is used from
 * one thread at a time; distinct handles may be used concurrently.
 */
#ifndef CHARLAB_H
#define CHARLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum charlab_status {
  CHARLAB_OK = 0,
  CHARLAB_ERR_INPUT = 1,    /* malformed files, bad arguments */
  CHARLAB_ERR_DOMAIN = 2,   /* precondition violated (non-normal subgroup, ...) */
  CHARLAB_ERR_CAPACITY = 3, /* enumeration bound exceeded */
  CHARLAB_ERR_INTERNAL = 4  /* engine invariant violated (a bug) */
} charlab_status;

typedef struct charlab_group charlab_group;
typedef struct charlab_report charlab_report;

typedef struct charlab_options {
  uint64_t enumeration_bound; /* 0 = default (100000) */
  const char* cache_dir;      /* NULL = no cache; CHARLAB_CACHE env overrides */
  int timing;                 /* nonzero fills timing_ms in reports */
} charlab_options;

const char* charlab_version(void);

/* Message for the most recent failing call on this thread. */
const char* charlab_last_error(void);

/* Group files: "degree N" + cycle-notation generators, "cayley N" + table,
 * or "builtin: SPEC". The id of a file-loaded group is the file stem. */
charlab_status charlab_group_from_file(const char* path, charlab_group** out);
charlab_status charlab_group_from_text(const char* text, const char* id, charlab_group** out);
void charlab_group_free(charlab_group* g);

uint64_t charlab_group_order(const charlab_group* g);
const char* charlab_group_id(const charlab_group* g);

/* Rationality profile only. opt may be NULL for defaults. */
charlab_status charlab_analyze(const charlab_group* g, unsigned p, const charlab_options* opt,
                               charlab_report** out);

/* checkers: comma-separated tokens (continuity, continuity-all,
 * continuity-b0, gap-frattini, gap-ppal, mckay, exponent, audit, all); NULL
 * or "" selects everything. scope is "all" or "b0" (NULL = "b0") and applies
 * to the plain "continuity" token. */
charlab_status charlab_check(const charlab_group* g, unsigned p, const char* checkers,
                             const char* scope, const charlab_options* opt,
                             charlab_report** out);

/* Corpus sweep: analyze + all checkers + audits per (group, prime).
 * primes_csv like "2,3,5". Group-level failures are recorded in the report,
 * never abort the sweep. */
charlab_status charlab_sweep(const char* manifest_path, const char* primes_csv, unsigned jobs,
                             const charlab_options* opt, charlab_report** out);

/* 1 when some verdict is false or an audit failed (a counterexample). */
int charlab_report_any_failed(const charlab_report* r);
/* 1 when a sweep recorded per-group input errors. */
int charlab_report_any_error(const charlab_report* r);

/* format: "json" or "text". *out is NUL-terminated, free with
 * charlab_string_free. */
charlab_status charlab_report_render(const charlab_report* r, const char* format, char** out);
void charlab_string_free(char* s);
void charlab_report_free(charlab_report* r);

#ifdef __cplusplus
}
#endif

#endif /* CHARLAB_H */
