/* specforge — engine for abstract specifications over a small first-order
 * functional language: define constrained function families with hidden
 * witnesses, then instantiate them, copying every derived function and
 * theorem under a functional substitution.
 *
 * All functions are safe to call from multiple threads on distinct
 * sessions; a single session must be externally serialized.
 */
#ifndef SPECFORGE_H
#define SPECFORGE_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. For the `load` path these double as CLI exit codes:
 * 0 success, 1 admission/obligation failure, 2 parse error. */
typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_ADMIT = 1,
  SF_ERR_PARSE = 2,
  SF_ERR_USAGE = 3,
  SF_ERR_IO = 4,
  SF_ERR_EVAL = 5,
  SF_ERR_QUERY = 6,
  SF_ERR_INTERNAL = 7
} sf_status;

/* Opaque engine session. Starts from the base world: the BINARY defspec
 * and the fold functions FOLDR, FOLDR1, FOLDL. */
typedef struct sf_session sf_session;

sf_session *sf_session_new(void);
void sf_session_free(sf_session *s);

/* Evaluation step budget for checks and the REPL (default 10000). */
sf_status sf_set_fuel(sf_session *s, long fuel);

/* Flags: "paranoid" (re-check executable copied theorems) and "assume"
 * (admit theorems unchecked). */
sf_status sf_set_flag(sf_session *s, const char *name, int enabled);

/* Admits a .gsl file of events against the session world. On success
 * *report_out (if non-NULL) receives the per-event report; free it with
 * sf_string_free. On failure the session's last error has the position
 * and message of the first failing event. */
sf_status sf_load_file(sf_session *s, const char *path, char **report_out);

/* One REPL interaction: an event, a bare expression, or a colon command
 * (:pf, :trans, :replacefns, :symbol-lemmas, :deps, :dot, :dump). */
sf_status sf_submit(sf_session *s, const char *input, char **output_out);

/* Derived functions and theorems of a spec, and the dependency graph in
 * DOT form. */
sf_status sf_deps(sf_session *s, const char *spec, char **listing_out);
sf_status sf_deps_dot(sf_session *s, const char *spec, char **dot_out);

/* Message of the most recent failure on this session. The pointer is
 * valid until the next call on the same session. */
const char *sf_last_error(const sf_session *s);

/* True when the text has no unclosed parenthesis; REPLs use this to keep
 * accumulating input lines. */
int sf_input_complete(const char *text);

void sf_string_free(char *s);
const char *sf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SPECFORGE_H */
