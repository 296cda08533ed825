/* C interface to the qsym library. Every function returns a qsym_status;
 * on failure qsym_last_error() describes the problem for the calling thread.
 * Strings handed out by the library are released with qsym_string_free. */
#ifndef QSYM_H
#define QSYM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QSYM_API __declspec(dllexport)
#else
#define QSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsym_status {
    QSYM_OK = 0,
    QSYM_ERR_PARSE = 1,
    QSYM_ERR_OUT_OF_RANGE = 2,
    QSYM_ERR_DEGENERATE = 3,
    QSYM_ERR_ARITY = 4,
    QSYM_ERR_INVALID_ARGUMENT = 5,
    QSYM_ERR_UNKNOWN_CHECK = 6,
    QSYM_ERR_NULL_ARGUMENT = 7,
    QSYM_ERR_INTERNAL = 8
} qsym_status;

typedef enum qsym_format { QSYM_FORMAT_TEXT = 0, QSYM_FORMAT_JSON = 1 } qsym_format;

typedef enum qsym_ch_form {
    QSYM_CH_STANDARD = 0,
    QSYM_CH_FACTORIZED = 1,
    QSYM_CH_WEDGE = 2,
    QSYM_CH_SYMMETRIC = 3
} qsym_ch_form;

typedef struct qsym_schur qsym_schur;
typedef struct qsym_report qsym_report;

QSYM_API const char* qsym_version(void);
QSYM_API const char* qsym_last_error(void);
QSYM_API void qsym_string_free(char* s);

/* Schur vectors. Partitions use the grammar "3,2,1", "[]" or "". */
QSYM_API qsym_status qsym_schur_from_partition(const char* partition, qsym_schur** out);
QSYM_API qsym_status qsym_schur_multiply(const qsym_schur* a, const qsym_schur* b, qsym_schur** out);
QSYM_API qsym_status qsym_schur_equal(const qsym_schur* a, const qsym_schur* b, int* equal);
QSYM_API qsym_status qsym_schur_term_count(const qsym_schur* f, size_t* count);
QSYM_API qsym_status qsym_schur_render(const qsym_schur* f, qsym_format format, char** out);
QSYM_API void qsym_schur_free(qsym_schur* f);

QSYM_API qsym_status qsym_lr_coefficient(const char* lam, const char* mu, const char* nu, int64_t* out);

/* Image of s_lam under the parameterization map with m even and n odd
 * eigenvalues. */
QSYM_API qsym_status qsym_susy_eval(const char* partition, int m, int n, qsym_format format, char** out);

/* Cayley-Hamilton identity listing; `param` applies the parameterization
 * map to every coefficient. */
QSYM_API qsym_status qsym_ch_render(int m, int n, qsym_ch_form form, int param, qsym_format format, char** out);

/* Named identity checks; nparams == 0 runs the default sweep. */
QSYM_API size_t qsym_check_count(void);
QSYM_API const char* qsym_check_name(size_t index);
QSYM_API qsym_status qsym_verify(const char* name, const char* const* params, size_t nparams, uint64_t seed, int trials,
                                 qsym_report** out);
/* Acceptance criteria 1-11, one report covering all of them. */
QSYM_API qsym_status qsym_verify_all(uint64_t seed, int trials, qsym_report** out);
QSYM_API int qsym_report_holds(const qsym_report* report);
QSYM_API qsym_status qsym_report_render(const qsym_report* report, qsym_format format, char** out);
QSYM_API void qsym_report_free(qsym_report* report);

#ifdef __cplusplus
}
#endif

#endif
