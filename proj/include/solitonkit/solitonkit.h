/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SOLITONKIT_H
#define SOLITONKIT_H

#if defined(_WIN32)
#  if defined(SK_BUILDING_LIBRARY)
#    define SK_API __declspec(dllexport)
#  else
#    define SK_API __declspec(dllimport)
#  endif
#else
#  define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. */
typedef struct sk_manifold sk_manifold;
typedef struct sk_report sk_report;

typedef enum sk_status {
    SK_OK = 0,
    SK_ERR_PARSE,
    SK_ERR_DOMAIN,
    SK_ERR_INVALID_INPUT,
    SK_ERR_UNKNOWN_NAME,
    SK_ERR_INCONSISTENT,
    SK_ERR_UNDERDETERMINED,
    SK_ERR_UNSUPPORTED,
    SK_ERR_PRECONDITION,
    SK_ERR_IO,
    SK_ERR_NULL_ARGUMENT,
    SK_ERR_INTERNAL
} sk_status;

typedef enum sk_format { SK_FORMAT_TEXT = 0, SK_FORMAT_JSON = 1 } sk_format;

/* Message of the most recent failure on the calling thread ("" if none). */
SK_API const char* sk_last_error(void);
SK_API const char* sk_status_name(sk_status status);

/* Strings returned through `char** out` are owned by the caller. */
SK_API void sk_string_free(char* s);

/* Newline-separated builtin fixture names. */
SK_API sk_status sk_builtin_names(char** out);

SK_API sk_status sk_manifold_builtin(const char* name, sk_manifold** out);
SK_API sk_status sk_manifold_parse(const char* text, sk_manifold** out);
SK_API sk_status sk_manifold_load(const char* path, sk_manifold** out);
SK_API sk_status sk_manifold_serialize(const sk_manifold* m, char** out);
SK_API int sk_manifold_dim(const sk_manifold* m);
SK_API void sk_manifold_free(sk_manifold* m);

/* Report builders. Vectors are "a1,...,am"; lambda is a parameter
   expression such as "1/2*p + 9/5"; flavor is one of ricci, almost_ricci,
   conformal, almost_conformal. */
SK_API sk_status sk_validate(const sk_manifold* m, int strict, sk_report** out);
SK_API sk_status sk_connection(const sk_manifold* m, sk_report** out);
SK_API sk_status sk_curvature(const sk_manifold* m, sk_report** out);
SK_API sk_status sk_ricci(const sk_manifold* m, sk_report** out);
SK_API sk_status sk_check_contact(const sk_manifold* m, sk_report** out);
SK_API sk_status sk_check_sasakian(const sk_manifold* m, sk_report** out);
SK_API sk_status sk_check_normality(const sk_manifold* m, sk_report** out);
SK_API sk_status sk_solve_lambda(const sk_manifold* m, const char* field, const char* flavor, int use_expected_ricci,
                                 sk_report** out);
SK_API sk_status sk_check_soliton(const sk_manifold* m, const char* field, const char* lambda, const char* flavor,
                                  sk_report** out);
/* dlambda may be NULL. */
SK_API sk_status sk_check_gradient(const sk_manifold* m, const char* df, const char* dlambda, const char* lambda,
                                   const char* flavor, sk_report** out);
/* p may be NULL (symbolic classification). */
SK_API sk_status sk_theorem36(int dim, const char* p, sk_report** out);
SK_API sk_status sk_verify_paper_example(sk_report** out);

SK_API sk_status sk_report_render(const sk_report* r, sk_format format, char** out);
/* 0 pass, 1 check failures, 2 ledger discrepancies only. */
SK_API int sk_report_exit_code(const sk_report* r);
SK_API void sk_report_free(sk_report* r);

#ifdef __cplusplus
}
#endif

#endif
