#ifndef RACAH_VERIFY_H
#define RACAH_VERIFY_H

/* C interface to the centralizer verification engine.
 *
 * Usage:
 *   rv_session* s = rv_session_new();
 *   char* json = NULL;
 *   const char* args[] = {"1/2", "1/2", "1/2"};
 *   int rc = rv_run(s, "conjecture", args, 3, &json);
 *   ...
 *   rv_string_free(json);
 *   rv_session_free(s);
 *
 * Every command produces a JSON report:
 *   {"schema":1, "command":..., "inputs":{...}, "results":[...],
 *    "verified":bool, "inconclusive":[...]}
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rv_session rv_session;

enum {
    RV_OK = 0,
    RV_ERR_BAD_ARGUMENT = 1, /* malformed spins, unknown command, excluded case */
    RV_ERR_LIMIT = 2,        /* configured spin cap or truncation bound violated */
    RV_ERR_INTERNAL = 3
};

rv_session* rv_session_new(void);
void rv_session_free(rv_session* s);

/* Degree truncation for abstract dimension certificates; valid range [4, 12].
 * Default 7. */
int rv_set_lmax(rv_session* s, unsigned lmax);

/* Largest accepted spin as a twice-integer (default 8, i.e. j <= 4). */
int rv_set_spin_cap(rv_session* s, unsigned twice_max);

/* Runs one command with argv-style arguments (spins accept "3/2" or "1.5").
 * Commands: bratteli, dim, kernel, conjecture, characters, s3,
 *           iso {tl|brauer|btl:<j>|bb}, hjk, braid, redundancy, paper-suite.
 * On RV_OK, *json_out receives a malloc'd JSON report; release it with
 * rv_string_free.  On error, *json_out is untouched and rv_last_error
 * describes the problem. */
int rv_run(rv_session* s, const char* command, const char* const* args, size_t nargs,
           char** json_out);

void rv_string_free(char* str);

/* Message of the last failed call on this session; empty string if none. */
const char* rv_last_error(const rv_session* s);

#ifdef __cplusplus
}
#endif

#endif
