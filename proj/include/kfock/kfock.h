/* C interface to the kfock library. Every function returning kf_status leaves
 * a message retrievable with kf_last_error() (thread-local) on failure.
 * Strings returned through char** are owned by the caller: release them with
 * kf_string_free. Handles are released with their _destroy function. */
#ifndef KFOCK_KFOCK_H
#define KFOCK_KFOCK_H

#include <stddef.h>

#if defined(_WIN32)
#define KF_API __declspec(dllexport)
#else
#define KF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kf_status {
  KF_OK = 0,
  KF_INVALID_ARGUMENT = 1,
  KF_DOMAIN_ERROR = 2,
  KF_POLICY_MISMATCH = 3,
  KF_BUDGET_EXCEEDED = 4,
  KF_CONTRACTION_FAILURE = 5,
  KF_INTERNAL_ERROR = 6
} kf_status;

/* Truncation: nu-index <= R, weight <= D, t-index <= K_t, t-degree <= T. */
typedef struct kf_policy {
  int R;
  int D;
  int K_t;
  int T;
} kf_policy;

typedef struct kf_theory kf_theory;
typedef struct kf_series kf_series;

KF_API kf_policy kf_default_policy(void);
KF_API const char* kf_last_error(void);
KF_API const char* kf_status_string(kf_status status);
KF_API void kf_string_free(char* s);

KF_API kf_status kf_theory_create(const kf_policy* policy, kf_theory** out);
KF_API void kf_theory_destroy(kf_theory* theory);

/* J(nu, q) as JSON; qorder >= 0 adds the q-expansion of every coefficient up to q^qorder. */
KF_API kf_status kf_jfun(kf_theory* theory, int qorder, char** json_out);
KF_API kf_status kf_smatrix(kf_theory* theory, char** json_out);
KF_API kf_status kf_metric(kf_theory* theory, kf_series** out);

/* <1/(1-q_1 L), ..., 1/(1-q_n L), 1, 1>; qs are "p/q" strings. */
KF_API kf_status kf_corr(kf_theory* theory, const char* const* qs, size_t n, kf_series** out);
/* <L^{e_1}, ..., L^{e_n}, 1, 1>. */
KF_API kf_status kf_corr_poly(kf_theory* theory, const int* exps, size_t n, kf_series** out);

/* Topological solution v and the flow right-hand sides n <= flows as JSON
 * {"v": series, "flows": [{"n", "rhs"}]}; with check != 0 the flow identities are
 * verified and *pass receives the verdict (pass may be NULL). */
KF_API kf_status kf_hierarchy(kf_theory* theory, int flows, int check, char** json_out, int* pass);

/* Runs a verification suite; json_out receives the report, *pass the verdict. */
KF_API kf_status kf_verify(const kf_policy* policy, const char* suite, int max_n, char** json_out, int* pass);
/* Space-separated list of suite names accepted by kf_verify. */
KF_API const char* kf_suite_names(void);

KF_API kf_status kf_char_table(int n, char** json_out);
KF_API kf_status kf_cosets(const int* lambda, size_t nl, const int* mu, size_t nm, char** json_out);
/* Heisenberg commutators for all m, l <= R on the point and the rank-2 test ring. */
KF_API kf_status kf_fock_demo(const kf_policy* policy, char** json_out);

KF_API kf_status kf_series_from_json(const char* json, kf_series** out);
KF_API kf_status kf_series_to_json(const kf_series* s, char** json_out);
/* op is '+', '-' or '*'. */
KF_API kf_status kf_series_arith(const kf_series* a, const kf_series* b, char op, kf_series** out);
KF_API kf_status kf_series_exp(const kf_series* a, kf_series** out);
KF_API kf_status kf_series_derive(const kf_series* a, const char* variable, kf_series** out);
/* Coefficient of a monomial given as JSON, e.g. {"nu_1":2}; returned as a "p/q" string. */
KF_API kf_status kf_series_coeff(const kf_series* a, const char* monomial_json, char** coeff_out);
KF_API void kf_series_destroy(kf_series* s);

#ifdef __cplusplus
}
#endif

#endif
