// Copyright 2026 The pest-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to pest-lab: perfect edge state transfer on cubelike graphs
 * Cay(F_2^m, S).
 *
 * Objects are opaque handles created by pest_*_create / pest_*_parse and
 * released with the matching *_destroy. Every fallible call returns a
 * pest_status; on failure the out-parameters are untouched and
 * pest_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread).
 *
 * Group elements are bit masks with x_1 as the most significant of the m
 * bits, so the tuple (110) is 0x6. Structured results come back as JSON
 * documents (schema "pest-lab/1") that the caller frees with
 * pest_string_free.
 */
#ifndef PESTLAB_PESTLAB_H
#define PESTLAB_PESTLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PESTLAB_BUILDING_LIBRARY)
#define PESTLAB_API __declspec(dllexport)
#else
#define PESTLAB_API __declspec(dllimport)
#endif
#else
#define PESTLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pest_status {
  PEST_OK = 0,
  PEST_E_INVALID_ARGUMENT = 1,
  PEST_E_REDUCIBLE_MODULUS = 2,
  PEST_E_DEGREE_MISMATCH = 3,
  PEST_E_ZERO_INVERSE = 4,
  PEST_E_SEARCH_EXHAUSTED = 5,
  PEST_E_BAD_PARAMETERS = 6,
  PEST_E_DEGENERATE_PAIR = 7,
  PEST_E_TOO_LARGE = 8,
  PEST_E_NOT_BENT = 9,
  PEST_E_WRONG_PARITY = 10,
  PEST_E_ALL_ONES_VALUE_ZERO = 11,
  PEST_E_EMPTY_SUPPORT = 12,
  PEST_E_ZERO_ELEMENT = 13,
  PEST_E_WIDTH_MISMATCH = 14,
  PEST_E_PARSE = 15,
  PEST_E_VERIFICATION_FAILED = 16,
  PEST_E_INTERNAL = 17,
  PEST_E_NULL_POINTER = 18
} pest_status;

typedef struct pest_field pest_field;       /* F_{2^m} with a trace-orthogonal basis */
typedef struct pest_conn_set pest_conn_set; /* connection set S of Cay(F_2^m, S) */
typedef struct pest_boolfn pest_boolfn;     /* Boolean function on F_2^m */

typedef struct pest_pair {
  uint32_t a, b, c, d; /* transfer from e_a - e_b to e_c - e_d */
} pest_pair;

PESTLAB_API const char* pest_version(void);
PESTLAB_API const char* pest_last_error(void);
PESTLAB_API const char* pest_status_name(pest_status status);
PESTLAB_API void pest_string_free(char* s);

/* Text helpers. Elements are m-character binary strings (first character is
 * the most significant bit) or 0x hex masks. */
PESTLAB_API pest_status pest_parse_element(const char* text, int m, uint32_t* out);
PESTLAB_API pest_status pest_parse_pair(const char* text, int m, pest_pair* out);
PESTLAB_API pest_status pest_parse_pi_coefficient(const char* text, int64_t* num, int64_t* den);

/* Fields. modulus == 0 selects the smallest irreducible of degree m. The
 * trace-orthogonal basis is computed on creation and can be replaced. */
PESTLAB_API pest_status pest_field_create(int m, uint32_t modulus, pest_field** out);
PESTLAB_API void pest_field_destroy(pest_field* field);
PESTLAB_API int pest_field_degree(const pest_field* field);
PESTLAB_API uint32_t pest_field_modulus(const pest_field* field);
PESTLAB_API pest_status pest_field_mul(const pest_field* field, uint32_t a, uint32_t b, uint32_t* out);
PESTLAB_API pest_status pest_field_inv(const pest_field* field, uint32_t a, uint32_t* out);
PESTLAB_API pest_status pest_field_trace(const pest_field* field, uint32_t a, int* out);
PESTLAB_API pest_status pest_field_set_basis(pest_field* field, const uint32_t* alphas, size_t count);
PESTLAB_API pest_status pest_field_basis(const pest_field* field, uint32_t* alphas, size_t capacity);
PESTLAB_API pest_status pest_field_coords(const pest_field* field, uint32_t x, uint32_t* out);
PESTLAB_API pest_status pest_field_expand(const pest_field* field, uint32_t v, uint32_t* out);
PESTLAB_API pest_status pest_field_basis_json(const pest_field* field, char** json);

/* Connection sets. m == 0 lets the parser infer the dimension from the
 * longest binary line. *warnings (optional) receives newline-separated
 * diagnostics or NULL. */
PESTLAB_API pest_status pest_conn_set_parse(const char* text, int m, pest_conn_set** out, char** warnings);
PESTLAB_API pest_status pest_conn_set_create(int m, const uint32_t* masks, size_t count, pest_conn_set** out);
PESTLAB_API void pest_conn_set_destroy(pest_conn_set* set);
PESTLAB_API int pest_conn_set_dimension(const pest_conn_set* set);
PESTLAB_API size_t pest_conn_set_size(const pest_conn_set* set);
PESTLAB_API pest_status pest_conn_set_members(const pest_conn_set* set, uint32_t* out, size_t capacity);
PESTLAB_API int pest_conn_set_is_connected(const pest_conn_set* set);

/* lambda has room for 2^m entries. */
PESTLAB_API pest_status pest_spectrum(const pest_conn_set* set, int64_t* lambda, size_t capacity);
PESTLAB_API pest_status pest_spectrum_json(const pest_conn_set* set, char** json);

/* Boolean functions. */
PESTLAB_API pest_status pest_boolfn_parse_truth_table(const char* text, int m, pest_boolfn** out);
PESTLAB_API pest_status pest_boolfn_from_conn_set(const pest_conn_set* set, pest_boolfn** out);
PESTLAB_API pest_status pest_boolfn_gold(const pest_field* field, unsigned e, pest_boolfn** out);
PESTLAB_API pest_status pest_boolfn_inner_product(int k, uint32_t linear_mask, int affine_bit, pest_boolfn** out);
PESTLAB_API void pest_boolfn_destroy(pest_boolfn* f);
PESTLAB_API int pest_boolfn_dimension(const pest_boolfn* f);
PESTLAB_API pest_status pest_boolfn_wht(const pest_boolfn* f, int64_t* values, size_t capacity);
PESTLAB_API pest_status pest_boolfn_wht_json(const pest_boolfn* f, char** json);

/* Analytic PEST decision. *positive is 1 or 0; json (optional) receives
 * the certificate. */
PESTLAB_API pest_status pest_check(const pest_conn_set* set, pest_pair pair, int* positive, char** json);
PESTLAB_API pest_status pest_search(const pest_conn_set* set, uint32_t a, uint32_t b, size_t* count, char** json);

/* Numerical oracle. t_num / t_den is the coefficient of pi. */
PESTLAB_API pest_status pest_transfer_amplitude(const pest_conn_set* set, pest_pair pair, double t, double* re,
                                                double* im);
PESTLAB_API pest_status pest_verify_at(const pest_conn_set* set, pest_pair pair, int64_t t_num, int64_t t_den,
                                       double tolerance, int* hit, char** json);
PESTLAB_API pest_status pest_verify_sweep(const pest_conn_set* set, pest_pair pair, double tolerance, int* hit,
                                          char** json);

/* Lifting constructions; the certificate is re-derived by pest_check. */
PESTLAB_API pest_status pest_lift_bent(const pest_boolfn* f, int allow_small_k, char** json);
PESTLAB_API pest_status pest_lift_semibent(const pest_field* field, unsigned e, int allow_small_k, char** json);

#ifdef __cplusplus
}
#endif

#endif /* PESTLAB_PESTLAB_H */
