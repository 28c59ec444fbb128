/*
 * monres — exact multigraded Betti numbers of monomial ideals.
 *
 * C interface of the shared library. All functions are thread-safe as long
 * as each monres_ideal handle is used from one thread at a time; error and
 * diagnostic strings are thread-local.
 *
 * Strings returned through `char **out` parameters are heap-allocated and
 * must be released with monres_free().
 */
#ifndef MONRES_H
#define MONRES_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum monres_status {
  MONRES_OK = 0,
  MONRES_ERR_INTERNAL = 1,  /* unexpected failure or falsified invariant */
  MONRES_ERR_USAGE = 2,     /* invalid arguments */
  MONRES_ERR_PARSE = 3,     /* malformed ideal text or JSON */
  MONRES_ERR_DOMAIN = 4,    /* precondition violated (unit ideal, ...) */
  MONRES_ERR_RESOURCE = 5,  /* face cap or retry budget exceeded */
  MONRES_ERR_MISMATCH = 6   /* verification found disagreeing methods */
} monres_status;

typedef enum monres_format {
  MONRES_FORMAT_TEXT = 0,
  MONRES_FORMAT_JSON = 1,
  MONRES_FORMAT_DOT = 2
} monres_format;

/* Opaque handle for a canonicalized (minimalized) monomial ideal. */
typedef struct monres_ideal monres_ideal;

/* Computation options. Zero-initialize and override what you need:
 * method "decompose" (default), "oracle", or "cancel"; field "Q" (default)
 * or "Fp:<prime>"; seed drives cancellation pivot order and random
 * campaigns; max_generators caps the 2^q face blowup (default 20). */
typedef struct monres_options {
  const char *method;
  const char *field;
  uint64_t seed;
  int max_generators;
  int format;
} monres_options;

/* Random-ideal campaign parameters for verify/fuzz. Zero-initialize;
 * zero fields fall back to defaults (vars 4, max_gens 6, max_exp 4,
 * count 100). */
typedef struct monres_random_params {
  int vars;
  int max_gens;
  int max_exp;
  int count;
  int artinian;        /* nonzero: only Artinian ideals */
  int almost_generic;  /* nonzero: only almost generic ideals */
  int semidominant;    /* > 0: exactly this many nondominant generators */
} monres_random_params;

/* Parses the comma-separated monomial grammar (e.g. "a^3*b^2, c^3*d") or,
 * when the text starts with '{', the JSON form
 * {"variables": [...], "generators": [[...], ...]}. The ideal is
 * minimalized; a warning is left in monres_last_diagnostics() when the
 * input generating set was not minimal. */
monres_status monres_ideal_parse(const char *text, monres_ideal **out);
void monres_ideal_free(monres_ideal *ideal);

/* Canonical text (format TEXT) or JSON form (format JSON). */
monres_status monres_ideal_render(const monres_ideal *ideal, int format,
                                  char **out);

/* Dominance classification report. TEXT or JSON. */
monres_status monres_classify(const monres_ideal *ideal, int format,
                              char **out);

/* Multigraded Betti numbers of S/M via the configured method. TEXT or
 * JSON; the JSON schema is
 * {"field":..., "pd":..., "totals":[...], "entries":[{"hdeg":...,
 *  "mdeg":[...], "count":...}, ...]}. */
monres_status monres_betti(const monres_ideal *ideal,
                           const monres_options *options, char **out);

/* Projective dimension of S/M. */
monres_status monres_pd(const monres_ideal *ideal,
                        const monres_options *options, int *out_pd);

/* Structural decomposition. tree == 0: the one-level term list.
 * tree != 0: the full recursive tree (TEXT, JSON, or DOT). */
monres_status monres_decompose(const monres_ideal *ideal,
                               const monres_options *options, int tree,
                               char **out);

/* Scarf complex face list (TEXT, JSON, or DOT lattice). When
 * restrict_mdeg is non-NULL it names a monomial in the ideal's variables
 * and the output is instead the full Taylor face lattice restricted to
 * that multidegree. */
monres_status monres_scarf(const monres_ideal *ideal,
                           const monres_options *options,
                           const char *restrict_mdeg, char **out);

/* Computes the Betti table through all three methods and compares.
 * Returns MONRES_ERR_MISMATCH (with the report still written) when they
 * disagree. */
monres_status monres_verify(const monres_ideal *ideal,
                            const monres_options *options, char **out);

/* Tri-method comparison on `params->count` seeded random ideals. */
monres_status monres_verify_random(const monres_random_params *params,
                                   const monres_options *options, char **out);

/* Randomized falsification search for one conjecture ("C1", "C2", "C3").
 * Counterexamples are re-verified through the other methods before being
 * reported. The report is well-formed either way. */
monres_status monres_fuzz(const char *conjecture,
                          const monres_random_params *params, int budget,
                          const monres_options *options, char **out);

/* Message for the most recent failure on this thread; empty when the last
 * call succeeded. */
const char *monres_last_error(void);

/* Warnings (e.g. non-minimal input) from the most recent call on this
 * thread; empty when there were none. */
const char *monres_last_diagnostics(void);

void monres_free(char *ptr);

const char *monres_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MONRES_H */
