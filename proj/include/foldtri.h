/* foldtri C API: exact construction and certification of regular, dense,
 * foldable lattice triangulations.
 *
 * All functions return a status code. Functions that produce output do so
 * through out-parameters; strings are heap-allocated and must be released
 * with foldtri_free_string, triangulation handles with foldtri_free.
 * Verification verdicts are JSON documents; FOLDTRI_FALSE means the verdict
 * is negative (e.g. not foldable) and the verdict string still carries the
 * witness. foldtri_error_message() describes the most recent failure on the
 * calling thread.
 */

#ifndef FOLDTRI_H
#define FOLDTRI_H

#ifdef __cplusplus
extern "C" {
#endif

#define FOLDTRI_OK 0        /* success / property verified */
#define FOLDTRI_FALSE 1     /* property verified to be false */
#define FOLDTRI_EINVAL 2    /* malformed or inconsistent input */
#define FOLDTRI_EINTERNAL 3 /* internal failure */

typedef struct foldtri_triangulation foldtri_triangulation;

/* Constructors. */
int foldtri_parse(const char* json, foldtri_triangulation** out);
int foldtri_staircase(long m, long n, foldtri_triangulation** out);
/* template_json may be NULL; it is required for d = 2 (mod 4), d >= 6, and
 * may carry a "matching" block. */
int foldtri_cube(long d, const char* template_json, foldtri_triangulation** out);
/* order strings: "color_consecutive", "symmetric",
 * "almost_color_consecutive:i,j,...", "explicit:p0,p1,...". */
int foldtri_simplicial_product(const foldtri_triangulation* a, const char* order_a,
                               const foldtri_triangulation* b, const char* order_b,
                               foldtri_triangulation** out);

/* Canonical JSON serialization of a triangulation. */
int foldtri_to_json(const foldtri_triangulation* t, char** out);

/* Verifiers; verdict receives a JSON object with witnesses. */
int foldtri_fold(const foldtri_triangulation* t, char** verdict);
int foldtri_signature(const foldtri_triangulation* t, char** verdict);
int foldtri_regular(const foldtri_triangulation* t, char** verdict);
int foldtri_cox(const foldtri_triangulation* t, char** verdict);

/* Emitters. */
int foldtri_fvector(const foldtri_triangulation* t, char** out);
/* format: "txt" or "json". */
int foldtri_wronski(const foldtri_triangulation* t, int normalize, const char* format,
                    char** out);

const char* foldtri_error_message(void);
void foldtri_free_string(char* s);
void foldtri_free(foldtri_triangulation* t);

#ifdef __cplusplus
}
#endif

#endif /* FOLDTRI_H */
