/* C interface of the braidloc shared library.
 *
 * Every fallible call returns a braidloc_status; on failure the message is
 * available from braidloc_last_error() on the same thread. Handles are
 * opaque and released with their *_free function. Strings returned through
 * char** out-parameters are released with braidloc_string_free. */
#ifndef BRAIDLOC_H
#define BRAIDLOC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BRAIDLOC_API __declspec(dllexport)
#else
#define BRAIDLOC_API __attribute__((visibility("default")))
#endif

typedef enum braidloc_status {
  BRAIDLOC_OK = 0,
  BRAIDLOC_ERR_INVALID_ARGUMENT = 1,
  BRAIDLOC_ERR_PARSE = 2,
  BRAIDLOC_ERR_BACKEND_MISMATCH = 3,
  BRAIDLOC_ERR_DIMENSION_MISMATCH = 4,
  BRAIDLOC_ERR_NOT_INVERTIBLE = 5,
  BRAIDLOC_ERR_YBE_FAILURE = 6,
  BRAIDLOC_ERR_NOT_IDEMPOTENT = 7,
  BRAIDLOC_ERR_VANISHING_QUANTUM_INTEGER = 8,
  BRAIDLOC_ERR_REDUCIBLE = 9,
  BRAIDLOC_ERR_UNSUPPORTED = 10,
  BRAIDLOC_ERR_UNCERTIFIED = 11,
  BRAIDLOC_ERR_INTERNAL = 12,
  BRAIDLOC_ERR_UNKNOWN = 99
} braidloc_status;

typedef enum braidloc_backend { BRAIDLOC_BACKEND_EXACT = 0, BRAIDLOC_BACKEND_APPROX = 1 } braidloc_backend;

typedef struct braidloc_matrix braidloc_matrix;
typedef struct braidloc_report braidloc_report;

BRAIDLOC_API const char* braidloc_version(void);
BRAIDLOC_API const char* braidloc_last_error(void);
BRAIDLOC_API const char* braidloc_status_name(braidloc_status status);
/* Nonzero when the status denotes malformed input rather than a failed computation. */
BRAIDLOC_API int braidloc_status_is_usage_error(braidloc_status status);
BRAIDLOC_API void braidloc_string_free(char* s);

/* Matrices: "builtin:NAME" or a JSON file path, or JSON text. */
BRAIDLOC_API braidloc_status braidloc_matrix_load(const char* source, braidloc_backend backend, braidloc_matrix** out);
BRAIDLOC_API braidloc_status braidloc_matrix_parse(const char* json_text, braidloc_backend backend,
                                                   braidloc_matrix** out);
BRAIDLOC_API void braidloc_matrix_free(braidloc_matrix* m);
BRAIDLOC_API int braidloc_matrix_dim(const braidloc_matrix* m);
BRAIDLOC_API braidloc_status braidloc_matrix_to_json(const braidloc_matrix* m, char** out);
BRAIDLOC_API braidloc_status braidloc_matrix_entry(const braidloc_matrix* m, int i, int j, double* re, double* im);
/* *out = 1 when the matrix satisfies the Yang-Baxter equation on (C^d)^3 (d = 0 infers d). */
BRAIDLOC_API braidloc_status braidloc_matrix_check_ybe(const braidloc_matrix* m, int d, int* out);
BRAIDLOC_API braidloc_status braidloc_matrix_is_unitary(const braidloc_matrix* m, int* out);

/* Numeric value of a cyclotomic literal such as "1/2*z8^1+1/2*z8^7". */
BRAIDLOC_API braidloc_status braidloc_cyc_to_complex(const char* literal, double* re, double* im);

/* Reports (schema 1 JSON). */
BRAIDLOC_API const char* braidloc_report_json(const braidloc_report* r);
BRAIDLOC_API int braidloc_report_passed(const braidloc_report* r);
BRAIDLOC_API void braidloc_report_free(braidloc_report* r);

typedef struct braidloc_ybe_options {
  const char* matrix;
  int d;
  int gybe_k, gybe_m;
  long order_bound;
  braidloc_backend backend;
  int timing;
} braidloc_ybe_options;

typedef struct braidloc_rep_options {
  const char* action; /* "probe", "eval" or "check" */
  const char* matrix;
  int d;
  int n;
  long bound;
  const char* word;
  braidloc_backend backend;
  int timing;
} braidloc_rep_options;

typedef struct braidloc_tl_options {
  const char* matrix;
  int d;
  const char* q;
  int n;
  int jw;
  int ell;
  long m;
  int cross_check;
  braidloc_backend backend;
  int timing;
} braidloc_tl_options;

typedef struct braidloc_fusion_options {
  const char* catalog;
  int param;
  const char* ring_file;
  const char* object;
  int depth;
  const char* expect;
  int timing;
} braidloc_fusion_options;

typedef struct braidloc_gaussian_options {
  int p;
  int n;
  int omega_exponent;
  int localize;
  const char* zeta;
  const char* out_dir;
  int include_matrices;
  int timing;
} braidloc_gaussian_options;

typedef struct braidloc_suite_options {
  int quick;
  int timing;
} braidloc_suite_options;

BRAIDLOC_API void braidloc_ybe_options_init(braidloc_ybe_options* o);
BRAIDLOC_API void braidloc_rep_options_init(braidloc_rep_options* o);
BRAIDLOC_API void braidloc_tl_options_init(braidloc_tl_options* o);
BRAIDLOC_API void braidloc_fusion_options_init(braidloc_fusion_options* o);
BRAIDLOC_API void braidloc_gaussian_options_init(braidloc_gaussian_options* o);
BRAIDLOC_API void braidloc_suite_options_init(braidloc_suite_options* o);

BRAIDLOC_API braidloc_status braidloc_ybe_check(const braidloc_ybe_options* o, braidloc_report** out);
BRAIDLOC_API braidloc_status braidloc_rep_run(const braidloc_rep_options* o, braidloc_report** out);
BRAIDLOC_API braidloc_status braidloc_tl_verify(const braidloc_tl_options* o, braidloc_report** out);
BRAIDLOC_API braidloc_status braidloc_fusion_analyze(const braidloc_fusion_options* o, braidloc_report** out);
BRAIDLOC_API braidloc_status braidloc_gaussian_build(const braidloc_gaussian_options* o, braidloc_report** out);
BRAIDLOC_API braidloc_status braidloc_run_suite(const braidloc_suite_options* o, braidloc_report** out);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDLOC_H */
