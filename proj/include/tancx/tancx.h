/* C interface to the tancx engine.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a tcx_status; on failure the thread-local
 * message from tcx_last_error() says what went wrong, and output parameters
 * are left untouched. Strings handed out by the library are released with
 * tcx_string_free. Reports are JSON documents with sorted keys.
 */
#ifndef TANCX_TANCX_H
#define TANCX_TANCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TCX_API __declspec(dllexport)
#else
#define TCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcx_status {
    TCX_OK = 0,
    TCX_ERR_INVALID_ARGUMENT = 1,
    TCX_ERR_OUT_OF_RANGE = 2,
    TCX_ERR_SHAPE = 3,
    TCX_ERR_PARSE = 4,
    TCX_ERR_INVALID_COMPLEX = 5,
    TCX_ERR_INCOMPATIBLE = 6,
    TCX_ERR_UNDERDETERMINED = 7,
    TCX_ERR_INTERNAL = 8
} tcx_status;

typedef struct tcx_simplicial tcx_simplicial;
typedef struct tcx_complex tcx_complex;

TCX_API const char* tcx_version(void);
TCX_API const char* tcx_status_name(tcx_status status);
/* Message of the most recent failure on this thread; "" if none. */
TCX_API const char* tcx_last_error(void);
TCX_API void tcx_string_free(char* text);

/* Simplicial vector spaces, in the versioned JSON interchange format. */
TCX_API tcx_status tcx_simplicial_from_json(const char* text, tcx_simplicial** out);
TCX_API tcx_status tcx_simplicial_to_json(const tcx_simplicial* s, char** out);
TCX_API void tcx_simplicial_free(tcx_simplicial* s);
TCX_API int tcx_simplicial_max_level(const tcx_simplicial* s);
/* dim X_level, or 0 for a level out of range. */
TCX_API size_t tcx_simplicial_dim(const tcx_simplicial* s, int level);

/* Chain complexes. */
TCX_API tcx_status tcx_complex_from_json(const char* text, tcx_complex** out);
TCX_API tcx_status tcx_complex_to_json(const tcx_complex* c, char** out);
TCX_API void tcx_complex_free(tcx_complex* c);
TCX_API int tcx_complex_length(const tcx_complex* c);
TCX_API size_t tcx_complex_dim(const tcx_complex* c, int degree);

/* Named preset. dims may be NULL (n_dims ignored) for the defaults; a
 * negative max_level selects the default level. spec, if not NULL, receives
 * the resolved preset with its expected tangent dims. */
TCX_API tcx_status tcx_example_build(const char* name, const size_t* dims, size_t n_dims, int max_level,
                                     tcx_simplicial** out, char** spec);
TCX_API tcx_status tcx_example_catalogue(char** out);

TCX_API tcx_status tcx_dk_realize(const tcx_complex* c, int max_level, tcx_simplicial** out);
TCX_API tcx_status tcx_moore(const tcx_simplicial* s, tcx_complex** out);
TCX_API tcx_status tcx_tangent(const tcx_simplicial* s, tcx_complex** out);
TCX_API tcx_status tcx_wbar(const tcx_simplicial* s, tcx_simplicial** out);

/* *valid is 1 when every simplicial identity holds. */
TCX_API tcx_status tcx_validate(const tcx_simplicial* s, int* valid, char** report);
/* *verdict is 1 when every horn projection is onto, and one-to-one above degree. */
TCX_API tcx_status tcx_kan(const tcx_simplicial* s, int degree, int* verdict, char** report);

typedef struct tcx_hom_limit_options {
    int witnesses;       /* nonzero: include solution bases */
    int drop_face_zero;  /* nonzero: omit every i = 0 face equation */
} tcx_hom_limit_options;

/* options may be NULL for the defaults. */
TCX_API tcx_status tcx_hom_limit(const tcx_simplicial* s, int cutoff, const tcx_hom_limit_options* options,
                                 char** report);

/* Reconstructs the truncated family from a compatible family document.
 * *compatible is 0 (and the report names the first violation) when the
 * family fails the compatibility equations. */
TCX_API tcx_status tcx_solve(const char* family, int* compatible, char** report);

TCX_API tcx_status tcx_selftest(uint64_t seed, int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif /* TANCX_TANCX_H */
