/* C interface to the braidnorm library: exact Hofer-energy lower bounds
 * from braid types on surfaces with genus and boundary.
 *
 * Every function returns a bn_status; on failure bn_last_error() describes
 * what went wrong (thread-local). Objects are opaque handles released with
 * their _free function; strings returned through char** out-parameters are
 * heap-allocated and released with bn_string_free. Rationals cross the
 * boundary as "num/den" strings so no precision is lost.
 */
#ifndef BRAIDNORM_H
#define BRAIDNORM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bn_status {
  BN_OK = 0,
  BN_ERR_INVALID_ARGUMENT = 1, /* domain violation (ranges, modes, weights) */
  BN_ERR_PARSE = 2,            /* malformed word, rational or JSON input */
  BN_ERR_NUMERIC = 3,          /* degenerate or unresolvable intersection data */
  BN_ERR_INTERNAL = 4          /* invariant breach inside the library */
} bn_status;

/* Alphabet modes for braid words. */
#define BN_MODE_RESTRICTED 0
#define BN_MODE_FULL 1

typedef struct bn_params bn_params;     /* premonotone link parameters */
typedef struct bn_word bn_word;         /* braid word over a signature */
typedef struct bn_homotopy bn_homotopy; /* sampled homotopy in the (a,b) chart */

/* Message for the most recent failure on this thread; never NULL. */
const char* bn_last_error(void);
void bn_string_free(char* s);

/* ---- link parameters ---------------------------------------------------- */

/* k >= 2 discs of area lambda, genus g, p boundary components; area is the
 * total surface area and may be NULL for the default 1/1. */
bn_status bn_params_new(long k, long g, long p, const char* lambda,
                        const char* area, bn_params** out);
/* {"k":int,"g":int,"p":int,"lambda":"num/den","area":"num/den"} */
bn_status bn_params_from_json(const char* text, bn_params** out);
void bn_params_free(bn_params* params);

bn_status bn_params_s_max(const bn_params* params, char** out);
/* Monotonicity constant after gluing extra_area (NULL means 0/1). */
bn_status bn_params_eta(const bn_params* params, const char* extra_area,
                        char** out);

/* ---- braid words -------------------------------------------------------- */

/* Grammar: ("s"|"a"|"b"|"c"|"z") index ("^" exponent)?, whitespace
 * separated, e.g. "s1 z1^2 a1". n_strands counts contractible plus
 * non-contractible circles (k + g). */
bn_status bn_word_parse(const char* text, long n_strands, long genus,
                        long punctures, int mode, bn_word** out);
void bn_word_free(bn_word* word);

bn_status bn_word_format(const bn_word* word, char** out);
bn_status bn_word_free_reduce(const bn_word* word, bn_word** out);
bn_status bn_word_expand(const bn_word* word, bn_word** out);
bn_status bn_word_linking_number(const bn_word* word, long long* out);
/* {"k_gen":int,"k_sigma":int,"k":[int,...]} */
bn_status bn_word_summary_json(const bn_word* word, char** out);
/* The loop around the last boundary component, solved from the boundary
 * relation; a restricted word over the (k, g, p) signature. */
bn_status bn_z_last_word(long k, long g, long p, bn_word** out);

/* ---- bounds ------------------------------------------------------------- */

/* v1 and v2 are comma-separated rationals with one entry per boundary
 * component, e.g. "1/5,0". */
bn_status bn_f_value(const bn_params* params, const bn_word* word,
                     const char* v1, const char* v2, char** out);
/* Canonical report JSON; closed form and vertex enumeration are both run
 * and must agree. */
bn_status bn_bound_report_json(const bn_params* params, const bn_word* word,
                               char** out);
/* {"closed":...,"lp":...,"agree":bool,...}; with_sweep adds the value at
 * every vertex pair. */
bn_status bn_maximize_json(const bn_params* params, const bn_word* word,
                           int with_sweep, char** out);
/* Disc-supported bound from the linking number; sigma-only words. */
bn_status bn_disc_lk_bound(const bn_params* params, const bn_word* word,
                           char** out);
/* {"ok":bool,"lines":[...]} — randomised relation and generator-value
 * consistency checks. */
bn_status bn_check_relations_json(const bn_params* params,
                                  unsigned long long seed, int trials,
                                  char** out);

/* ---- homotopies and intersections --------------------------------------- */

/* {"M":int,"N":int,"a":[[re,im],...],"b":[[re,im],...]}, row-major nodes. */
bn_status bn_homotopy_from_json(const char* text, bn_homotopy** out);
/* name is "elementary" or "sigma". */
bn_status bn_homotopy_model(const char* name, int m, int n, bn_homotopy** out);
void bn_homotopy_free(bn_homotopy* h);
bn_status bn_homotopy_to_json(const bn_homotopy* h, char** out);

/* {"records":[{"cell":[i,j],"s":..,"t":..,"sign":+-1},...],"total":int,
 *  "boundary_winding":int,"agree":bool} */
bn_status bn_intersections_json(const bn_homotopy* h, double tol, char** out);
bn_status bn_boundary_winding(const bn_homotopy* h, long* out);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDNORM_H */
