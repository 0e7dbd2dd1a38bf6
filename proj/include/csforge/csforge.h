/* C interface to the csforge complementary sequence library.
 *
 * Every function that can fail returns a csf_status. On failure a message
 * describing the problem is available from csf_last_error() on the calling
 * thread until the next failing call. Objects are opaque handles owned by the
 * caller and released with the matching *_destroy function; destroying NULL
 * is a no-op.
 *
 * Sequences cross the boundary as arrays of csf_complex. Functions that fill
 * caller buffers take a capacity and return CSF_ERR_BUFFER when it is too
 * small; query the required size first.
 */
#ifndef CSFORGE_CSFORGE_H
#define CSFORGE_CSFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CSFORGE_BUILDING)
#define CSF_API __declspec(dllexport)
#else
#define CSF_API __declspec(dllimport)
#endif
#else
#define CSF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csf_status {
  CSF_OK = 0,
  CSF_ERR_INVALID = 1,  /* argument violates a precondition */
  CSF_ERR_SEED = 2,     /* seed pair is not complementary */
  CSF_ERR_LIMIT = 3,    /* size guard exceeded */
  CSF_ERR_BUFFER = 4,   /* caller buffer too small */
  CSF_ERR_INTERNAL = 5
} csf_status;

typedef struct csf_complex {
  double re;
  double im;
} csf_complex;

typedef struct csf_params csf_params;
typedef struct csf_pair csf_pair;
typedef struct csf_codebook csf_codebook;

CSF_API const char* csf_version(void);
CSF_API const char* csf_last_error(void);
CSF_API const char* csf_status_name(csf_status status);

/* ---- Encoder parameters ------------------------------------------------ */

/* m steps over phase modulus H (even); pi = (1..m), zero amplitudes, phases
 * and shifts, seed a = b = (1). */
CSF_API csf_status csf_params_create(int m, int H, csf_params** out);
CSF_API csf_status csf_params_clone(const csf_params* p, csf_params** out);
CSF_API void csf_params_destroy(csf_params* p);

CSF_API csf_status csf_params_set_pi(csf_params* p, const int* pi, size_t m);
CSF_API csf_status csf_params_set_amplitude(csf_params* p, const double* e, size_t m, double e_prime);
/* Phases must lie in [0, H). */
CSF_API csf_status csf_params_set_phase(csf_params* p, const double* k, size_t m, double k_prime,
                                        double k_dprime);
CSF_API csf_status csf_params_set_shifts(csf_params* p, const int* d, size_t m);
/* Fails with CSF_ERR_SEED unless (a, b) is complementary. */
CSF_API csf_status csf_params_set_seed(csf_params* p, const csf_complex* a, const csf_complex* b,
                                       size_t n);

CSF_API int csf_params_m(const csf_params* p);
CSF_API int csf_params_H(const csf_params* p);
CSF_API size_t csf_params_seed_length(const csf_params* p);
CSF_API size_t csf_params_output_length(const csf_params* p);
CSF_API csf_status csf_params_get_pi(const csf_params* p, int* pi, size_t cap);
CSF_API csf_status csf_params_get_amplitude(const csf_params* p, double* e, size_t cap, double* e_prime);
CSF_API csf_status csf_params_get_phase(const csf_params* p, double* k, size_t cap, double* k_prime,
                                        double* k_dprime);
CSF_API csf_status csf_params_get_shifts(const csf_params* p, int* d, size_t cap);
CSF_API csf_status csf_params_get_seed(const csf_params* p, csf_complex* a, csf_complex* b, size_t cap);

/* One QAM rule instance. indices holds (u, v) for green, yellow and orange,
 * (u, v, w) for blue and (u, t, v, w) for cyan. base_k has m entries in Z_4
 * or is NULL for all zeros. */
typedef struct csf_rule_spec {
  const char* rule; /* "green", "yellow", "blue", "cyan" or "orange" */
  int s;
  const int* indices;
  size_t n_indices;
  int ell;
  int sign_a;
  int sign_b;
  int blue_swap;
  const int* base_k;
  int z;
} csf_rule_spec;

/* Parameters (H = 4, seed a = b = (1)) realising a rule over permutation pi. */
CSF_API csf_status csf_params_from_rule(const csf_rule_spec* spec, const int* pi, size_t m,
                                        csf_params** out);

/* ---- Encoding ----------------------------------------------------------- */

CSF_API csf_status csf_encode(const csf_params* p, csf_pair** out);
CSF_API void csf_pair_destroy(csf_pair* pair);
CSF_API size_t csf_pair_length(const csf_pair* pair);
/* 1 if two blocks were summed onto a common position. */
CSF_API int csf_pair_overlap(const csf_pair* pair);
/* Copies c and/or d (either may be NULL) into buffers of capacity cap. */
CSF_API csf_status csf_pair_copy(const csf_pair* pair, csf_complex* c, csf_complex* d, size_t cap);

/* ---- Analysis ----------------------------------------------------------- */

/* ok = 1 iff max_{k != 0} |rho_a(k) + rho_b(k)| <= tol * (rho_a(0) + rho_b(0)).
 * Output pointers other than ok may be NULL. */
CSF_API csf_status csf_gcp_check(const csf_complex* a, const csf_complex* b, size_t n, double tol,
                                 int* ok, double* max_violation, double* energy);
CSF_API csf_status csf_apac(const csf_complex* seq, size_t n, csf_complex* rho, size_t cap);
CSF_API csf_status csf_papr_bound(const csf_complex* seq, size_t n, double* db);
/* power may be NULL; otherwise it receives n * oversampling samples. */
CSF_API csf_status csf_papr_oversampled(const csf_complex* seq, size_t n, int oversampling, double* db,
                                        double* power, size_t power_cap);
CSF_API int csf_is_qam_point(csf_complex value, int s, double tol);
CSF_API csf_status csf_check_no_overlap(const int* d, const int* pi, size_t m, int* ok);
/* Number of maximal nonzero runs; starts/ends (may be NULL) receive [begin, end). */
CSF_API csf_status csf_support_clusters(const csf_complex* seq, size_t n, size_t* count, size_t* starts,
                                        size_t* ends, size_t cap);

/* ---- Counting and enumeration ------------------------------------------ */

/* rule NULL or "total" gives the total over all rules. longer_seed selects
 * the N > 1 formulas. */
CSF_API csf_status csf_count(const char* rule, int s, int m, int longer_seed, uint64_t* units,
                             uint64_t* unit_value, uint64_t* absolute);
/* Parameter sets the rule enumeration visits (pi NULL means all m!). */
CSF_API csf_status csf_enumeration_size(const char* rule, int s, int m, const int* pi, uint64_t* size);
/* Exhaustive enumeration with deduplication of the first sequence. The seed
 * arrays may be NULL for a = b = (1). limit 0 uses the default guard. */
CSF_API csf_status csf_enumerate(const char* rule, int s, int m, const csf_complex* a,
                                 const csf_complex* b, size_t n, const int* pi, uint64_t limit,
                                 uint64_t* visited, uint64_t* distinct);

/* ---- Codebooks and simulation ------------------------------------------ */

/* Distinct outputs of a rule in enumeration order, truncated to a power of
 * two. More than 65536 distinct outputs fail with CSF_ERR_LIMIT. */
CSF_API csf_status csf_codebook_from_rule(const char* rule, int s, int m, const int* pi, uint64_t limit,
                                          csf_codebook** out);
/* count words of len samples each, stored row by row. */
CSF_API csf_status csf_codebook_from_words(const csf_complex* words, size_t count, size_t len,
                                           csf_codebook** out);
CSF_API void csf_codebook_destroy(csf_codebook* book);
CSF_API size_t csf_codebook_size(const csf_codebook* book);
CSF_API int csf_codebook_bits(const csf_codebook* book);
CSF_API size_t csf_codebook_length(const csf_codebook* book);

typedef struct csf_sim_point {
  double ebn0_db;
  uint64_t bit_errors;
  uint64_t bits;
  uint64_t word_errors;
  double ber;
} csf_sim_point;

/* AWGN minimum-distance simulation; points receives npoints entries. An
 * Eb/N0 of +INFINITY means no noise. */
CSF_API csf_status csf_simulate(const csf_codebook* book, const double* ebn0_db, size_t npoints,
                                uint64_t trials, uint64_t seed, csf_sim_point* points,
                                double* papr_p90_db, double* peak_power_p90);

#ifdef __cplusplus
}
#endif

#endif
