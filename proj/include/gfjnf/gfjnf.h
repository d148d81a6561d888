/*
   Copyright 2026 The gfjnf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the gfjnf library: generalized Jordan normal forms, similarity
 * and SL_n conjugacy for square matrices over GF(p^k), q = p^k <= 65536.
 *
 * Elements are uint32_t reps in [0, q): a_0 + a_1 x + ... is stored as the
 * base-p integer a_0 + a_1 p + .... Matrices act on row vectors.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_destroy function. Functions returning gfjnf_status
 * leave their out parameters untouched on failure, and gfjnf_last_error()
 * then describes the failure for the calling thread. */

#ifndef GFJNF_GFJNF_H
#define GFJNF_GFJNF_H

#include <stddef.h>
#include <stdint.h>

#if defined(GFJNF_BUILDING)
#define GFJNF_API __attribute__((visibility("default")))
#else
#define GFJNF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfjnf_status {
    GFJNF_OK = 0,
    GFJNF_E_INVALID_ARGUMENT = 1,
    GFJNF_E_NOT_PRIME = 2,
    GFJNF_E_REDUCIBLE_MODULUS = 3,
    GFJNF_E_UNSUPPORTED_FIELD = 4,
    GFJNF_E_PARSE = 5,
    GFJNF_E_SHAPE = 6,
    GFJNF_E_FIELD_MISMATCH = 7,
    GFJNF_E_PRECONDITION = 8,
    GFJNF_E_DIVISION_BY_ZERO = 9,
    GFJNF_E_SINGULAR = 10,
    GFJNF_E_NO_DEPENDENCE = 11,
    GFJNF_E_VERIFICATION = 12,
    GFJNF_E_OUT_OF_MEMORY = 13,
    GFJNF_E_INTERNAL = 14
} gfjnf_status;

typedef enum gfjnf_path {
    GFJNF_PATH_AUTO = 0,
    GFJNF_PATH_GENERAL = 1,
    GFJNF_PATH_CYCLIC = 2,
    GFJNF_PATH_IRREDUCIBLE = 3
} gfjnf_path;

typedef enum gfjnf_random_kind {
    GFJNF_RANDOM_UNIFORM = 0,
    /* conjugated companion matrix of a random monic polynomial */
    GFJNF_RANDOM_CYCLIC = 1,
    /* conjugated I_c (x) M_p, p irreducible, c the smallest divisor of n >= min(4, n) */
    GFJNF_RANDOM_IRREDUCIBLE_MU = 2
} gfjnf_random_kind;

typedef struct gfjnf_options {
    uint64_t seed;
    gfjnf_path path;
    /* target success probability of the random cyclic-vector search, in [0, 1) */
    double epsilon;
} gfjnf_options;

typedef struct gfjnf_field gfjnf_field;
typedef struct gfjnf_matrix gfjnf_matrix;
typedef struct gfjnf_poly gfjnf_poly;
typedef struct gfjnf_factored gfjnf_factored;
typedef struct gfjnf_jnf gfjnf_jnf;
typedef struct gfjnf_sl_split gfjnf_sl_split;

/* seed 0, path auto, epsilon 0.99 */
GFJNF_API gfjnf_options gfjnf_default_options(void);

GFJNF_API const char* gfjnf_status_string(gfjnf_status status);
/* Message for the last failure on this thread; "" when none. */
GFJNF_API const char* gfjnf_last_error(void);
GFJNF_API void gfjnf_string_free(char* s);

/* ---- fields ---- */

/* modulus: k + 1 coefficients c_0..c_k, or NULL for the default modulus. */
GFJNF_API gfjnf_status gfjnf_field_create(uint32_t p, uint32_t k, const uint32_t* modulus, gfjnf_field** out);
GFJNF_API void gfjnf_field_destroy(gfjnf_field* f);
GFJNF_API uint32_t gfjnf_field_p(const gfjnf_field* f);
GFJNF_API uint32_t gfjnf_field_k(const gfjnf_field* f);
GFJNF_API uint32_t gfjnf_field_q(const gfjnf_field* f);
/* Writes k + 1 coefficients (nothing for prime fields); *len receives the count. */
GFJNF_API gfjnf_status gfjnf_field_modulus(const gfjnf_field* f, uint32_t* out, size_t cap, size_t* len);
GFJNF_API uint32_t gfjnf_field_primitive(const gfjnf_field* f);
GFJNF_API gfjnf_status gfjnf_field_mul(const gfjnf_field* f, uint32_t a, uint32_t b, uint32_t* out);
GFJNF_API gfjnf_status gfjnf_field_add(const gfjnf_field* f, uint32_t a, uint32_t b, uint32_t* out);
GFJNF_API gfjnf_status gfjnf_field_inv(const gfjnf_field* f, uint32_t a, uint32_t* out);

/* ---- matrices ---- */

/* entries: n * n row-major reps, or NULL for the zero matrix. */
GFJNF_API gfjnf_status gfjnf_matrix_create(const gfjnf_field* f, size_t n, const uint32_t* entries, gfjnf_matrix** out);
GFJNF_API gfjnf_status gfjnf_matrix_identity(const gfjnf_field* f, size_t n, gfjnf_matrix** out);
GFJNF_API gfjnf_status gfjnf_matrix_random(const gfjnf_field* f, size_t n, gfjnf_random_kind kind, uint64_t seed,
                                           gfjnf_matrix** out);
/* Parses the gfmat text format; the matrix carries its own field. */
GFJNF_API gfjnf_status gfjnf_matrix_parse(const char* text, gfjnf_matrix** out);
/* *out is released with gfjnf_string_free. */
GFJNF_API gfjnf_status gfjnf_matrix_serialize(const gfjnf_matrix* m, char** out);
GFJNF_API void gfjnf_matrix_destroy(gfjnf_matrix* m);
GFJNF_API gfjnf_status gfjnf_matrix_field(const gfjnf_matrix* m, gfjnf_field** out);
GFJNF_API size_t gfjnf_matrix_dim(const gfjnf_matrix* m);
GFJNF_API uint32_t gfjnf_matrix_get(const gfjnf_matrix* m, size_t i, size_t j);
/* Copies n * n row-major entries into out. */
GFJNF_API gfjnf_status gfjnf_matrix_entries(const gfjnf_matrix* m, uint32_t* out, size_t cap);
GFJNF_API gfjnf_status gfjnf_matrix_mul(const gfjnf_matrix* a, const gfjnf_matrix* b, gfjnf_matrix** out);
GFJNF_API gfjnf_status gfjnf_matrix_inverse(const gfjnf_matrix* a, gfjnf_matrix** out);
GFJNF_API gfjnf_status gfjnf_matrix_determinant(const gfjnf_matrix* a, uint32_t* out);
GFJNF_API gfjnf_status gfjnf_matrix_equal(const gfjnf_matrix* a, const gfjnf_matrix* b, int* out);
/* *out = 1 when x is invertible and x a x^{-1} = b. */
GFJNF_API gfjnf_status gfjnf_conjugates_to(const gfjnf_matrix* x, const gfjnf_matrix* a, const gfjnf_matrix* b,
                                           int* out);

/* ---- polynomials ---- */

GFJNF_API gfjnf_status gfjnf_min_poly(const gfjnf_matrix* a, gfjnf_poly** out);
GFJNF_API gfjnf_status gfjnf_char_poly(const gfjnf_matrix* a, gfjnf_poly** out);
GFJNF_API void gfjnf_poly_destroy(gfjnf_poly* p);
/* -1 for the zero polynomial. */
GFJNF_API int gfjnf_poly_degree(const gfjnf_poly* p);
/* Coefficient of X^i (0 beyond the degree). */
GFJNF_API uint32_t gfjnf_poly_coeff(const gfjnf_poly* p, size_t i);

/* Factorization of the minimal polynomial into monic irreducibles. */
GFJNF_API gfjnf_status gfjnf_min_poly_factor(const gfjnf_matrix* a, uint64_t seed, gfjnf_factored** out);
GFJNF_API void gfjnf_factored_destroy(gfjnf_factored* f);
GFJNF_API size_t gfjnf_factored_count(const gfjnf_factored* f);
/* Factor i as a new poly handle, multiplicity in *power. */
GFJNF_API gfjnf_status gfjnf_factored_get(const gfjnf_factored* f, size_t i, gfjnf_poly** factor, uint32_t* power);

/* ---- Jordan normal form ---- */

/* opts may be NULL for the defaults. The result is verified exactly before it
 * is returned; GFJNF_E_VERIFICATION signals a failed check. */
GFJNF_API gfjnf_status gfjnf_jnf_compute(const gfjnf_matrix* a, const gfjnf_options* opts, gfjnf_jnf** out);
/* Cyclic fast path with the factored minimal polynomial supplied by the caller. */
GFJNF_API gfjnf_status gfjnf_jnf_compute_cyclic(const gfjnf_matrix* a, const gfjnf_factored* mu,
                                                const gfjnf_options* opts, gfjnf_jnf** out);
GFJNF_API void gfjnf_jnf_destroy(gfjnf_jnf* r);
GFJNF_API size_t gfjnf_jnf_divisor_count(const gfjnf_jnf* r);
GFJNF_API gfjnf_status gfjnf_jnf_divisor(const gfjnf_jnf* r, size_t i, gfjnf_poly** factor, uint32_t* power);
GFJNF_API gfjnf_status gfjnf_jnf_form(const gfjnf_jnf* r, gfjnf_matrix** out);
GFJNF_API gfjnf_status gfjnf_jnf_basis(const gfjnf_jnf* r, gfjnf_matrix** out);
/* Recomputes basis * a * basis^{-1} == form and that form is the block sum of
 * the divisors; *out = 1 when both hold. */
GFJNF_API gfjnf_status gfjnf_jnf_verify(const gfjnf_jnf* r, const gfjnf_matrix* a, int* out);

/* ---- similarity and SL_n conjugacy ---- */

/* *verdict = 1 when similar; then *witness (if witness is not NULL) receives X
 * with X a X^{-1} = b, already verified. */
GFJNF_API gfjnf_status gfjnf_similar(const gfjnf_matrix* a, const gfjnf_matrix* b, const gfjnf_options* opts,
                                     int* verdict, gfjnf_matrix** witness);
/* Same contract inside SL_n; both inputs need determinant 1. */
GFJNF_API gfjnf_status gfjnf_sl_conjugate(const gfjnf_matrix* a, const gfjnf_matrix* b, const gfjnf_options* opts,
                                          int* verdict, gfjnf_matrix** witness);
GFJNF_API gfjnf_status gfjnf_sl_splitting(const gfjnf_matrix* a, const gfjnf_options* opts, gfjnf_sl_split** out);
GFJNF_API void gfjnf_sl_split_destroy(gfjnf_sl_split* s);
GFJNF_API uint32_t gfjnf_sl_split_count(const gfjnf_sl_split* s);
GFJNF_API uint32_t gfjnf_sl_split_omega(const gfjnf_sl_split* s);
GFJNF_API gfjnf_status gfjnf_sl_split_representative(const gfjnf_sl_split* s, size_t i, gfjnf_matrix** out);

#ifdef __cplusplus
}
#endif

#endif /* GFJNF_GFJNF_H */
