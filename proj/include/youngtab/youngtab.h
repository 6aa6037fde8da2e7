/*
 * C interface to the youngtab library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function; *_free accepts NULL. Functions that can fail
 * return a yt_status; on failure the out-parameters are left untouched and
 * yt_last_error_message() describes the failure for the calling thread.
 * Strings returned through char** are heap-allocated by the library and must
 * be released with yt_string_free. Big integers cross the boundary as decimal
 * strings.
 */
#ifndef YOUNGTAB_H
#define YOUNGTAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(YOUNGTAB_BUILDING)
#    define YT_API __declspec(dllexport)
#  else
#    define YT_API __declspec(dllimport)
#  endif
#else
#  define YT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum yt_status {
  YT_OK = 0,
  YT_DONE = 1, /* iterator exhausted; not an error */
  YT_ERR_PARSE = 2,
  YT_ERR_NOT_WEAKLY_DECREASING = 3,
  YT_ERR_NOT_CONTAINED = 4,
  YT_ERR_INVALID_BOX = 5,
  YT_ERR_ENTRY_EXCEEDS_BOUND = 6,
  YT_ERR_MALFORMED_FILLING = 7,
  YT_ERR_WIDTH_MISMATCH = 8,
  YT_ERR_NOT_SYMMETRIC = 9,
  YT_ERR_NOT_HOMOGENEOUS = 10,
  YT_ERR_MALFORMED_PAIR = 11,
  YT_ERR_INVALID_ARGUMENT = 12,
  YT_ERR_GUARD_EXCEEDED = 13,
  YT_ERR_INTERNAL = 14
} yt_status;

typedef struct yt_partition yt_partition;
typedef struct yt_partition_iter yt_partition_iter;
typedef struct yt_filling yt_filling;
typedef struct yt_filling_iter yt_filling_iter;
typedef struct yt_poly yt_poly;
typedef struct yt_expansion yt_expansion;
typedef struct yt_permutation yt_permutation;
typedef struct yt_rsk_trace yt_rsk_trace;

YT_API const char* yt_version(void);
YT_API const char* yt_status_name(yt_status status);
YT_API const char* yt_last_error_message(void);
YT_API void yt_string_free(char* s);

/* Partitions. Text form is "[4,2,1]"; "[]" is the empty partition. */
YT_API yt_status yt_partition_parse(const char* text, yt_partition** out);
YT_API yt_status yt_partition_from_parts(const uint32_t* parts, size_t count,
                                         yt_partition** out);
YT_API yt_status yt_partition_clone(const yt_partition* p, yt_partition** out);
YT_API void yt_partition_free(yt_partition* p);
YT_API size_t yt_partition_num_rows(const yt_partition* p);
/* 0 for rows past the last one. */
YT_API uint32_t yt_partition_part(const yt_partition* p, size_t row);
YT_API uint64_t yt_partition_size(const yt_partition* p);
YT_API yt_status yt_partition_to_string(const yt_partition* p, char** out);
YT_API int yt_partition_equal(const yt_partition* a, const yt_partition* b);
YT_API int yt_partition_contains(const yt_partition* inner,
                                 const yt_partition* outer);
YT_API yt_status yt_partition_conjugate(const yt_partition* p,
                                        yt_partition** out);
YT_API yt_status yt_hook_length(const yt_partition* p, size_t row, size_t col,
                                uint64_t* out);
/* Hook-length formula; at most 100 boxes. */
YT_API yt_status yt_count_standard(const yt_partition* p, char** out);

/* Partitions of n in reverse-lexicographic order. */
YT_API yt_status yt_partitions_of(uint32_t n, yt_partition_iter** out);
/* YT_OK with a new partition, or YT_DONE. */
YT_API yt_status yt_partition_iter_next(yt_partition_iter* it,
                                        yt_partition** out);
YT_API void yt_partition_iter_free(yt_partition_iter* it);

/* Fillings. Text form: rows separated by '/', entries by ',' or spaces,
 * leading '.' tokens for boxes of the inner shape, e.g. ". . 1/. 1/2". */
YT_API yt_status yt_filling_parse(const char* text, yt_filling** out);
YT_API void yt_filling_free(yt_filling* t);
YT_API yt_status yt_filling_clone(const yt_filling* t, yt_filling** out);
YT_API yt_status yt_filling_outer(const yt_filling* t, yt_partition** out);
YT_API yt_status yt_filling_inner(const yt_filling* t, yt_partition** out);
YT_API size_t yt_filling_num_rows(const yt_filling* t);
/* Number of entries in the row (boxes of the inner shape excluded). */
YT_API size_t yt_filling_row_length(const yt_filling* t, size_t row);
/* Column offset of the row's first entry (the inner shape's row length). */
YT_API size_t yt_filling_row_offset(const yt_filling* t, size_t row);
YT_API uint32_t yt_filling_entry(const yt_filling* t, size_t row, size_t index);
YT_API uint64_t yt_filling_num_boxes(const yt_filling* t);
/* One row per line, entries space-separated, inner boxes as '.'. */
YT_API yt_status yt_filling_render(const yt_filling* t, char** out);
YT_API int yt_filling_equal(const yt_filling* a, const yt_filling* b);
YT_API int yt_filling_is_semistandard(const yt_filling* t);
YT_API int yt_filling_is_standard(const yt_filling* t);
/* counts must hold `bound` values; counts[i-1] receives the number of i's. */
YT_API yt_status yt_filling_weight(const yt_filling* t, uint32_t bound,
                                   uint32_t* counts);
/* Rows top to bottom, right to left. Writes up to `capacity` letters and
 * stores the full length in *length. */
YT_API yt_status yt_filling_reverse_reading_word(const yt_filling* t,
                                                 uint32_t* letters,
                                                 size_t capacity,
                                                 size_t* length);
YT_API int yt_is_lattice_word(const uint32_t* letters, size_t length);
YT_API yt_status yt_bender_knuth(const yt_filling* t, uint32_t i,
                                 yt_filling** out);

/* Lazy enumerations. inner may be NULL for a straight shape. */
YT_API yt_status yt_enumerate_ssyt(const yt_partition* outer,
                                   const yt_partition* inner, uint32_t bound,
                                   yt_filling_iter** out);
YT_API yt_status yt_enumerate_syt(const yt_partition* shape,
                                  yt_filling_iter** out);
/* Littlewood-Richardson fillings of outer/inner with the given content. */
YT_API yt_status yt_enumerate_lr(const yt_partition* outer,
                                 const yt_partition* inner,
                                 const yt_partition* content,
                                 yt_filling_iter** out);
/* YT_OK with a new filling, or YT_DONE. */
YT_API yt_status yt_filling_iter_next(yt_filling_iter* it, yt_filling** out);
YT_API void yt_filling_iter_free(yt_filling_iter* it);

/* Sparse polynomials over the integers in x1..x_width. */
YT_API yt_status yt_poly_constant(size_t width, int64_t c, yt_poly** out);
YT_API yt_status yt_poly_variable(size_t width, size_t index, yt_poly** out);
YT_API void yt_poly_free(yt_poly* p);
YT_API size_t yt_poly_width(const yt_poly* p);
YT_API size_t yt_poly_num_terms(const yt_poly* p);
/* Term `index` in lex-descending order. exps must hold width values;
 * coefficient may be NULL. */
YT_API yt_status yt_poly_term(const yt_poly* p, size_t index, uint32_t* exps,
                              char** coefficient);
YT_API yt_status yt_poly_render(const yt_poly* p, char** out);
YT_API yt_status yt_poly_add(const yt_poly* a, const yt_poly* b, yt_poly** out);
YT_API yt_status yt_poly_mul(const yt_poly* a, const yt_poly* b, yt_poly** out);
YT_API int yt_poly_equal(const yt_poly* a, const yt_poly* b);
YT_API int yt_poly_is_symmetric(const yt_poly* p);
YT_API yt_status yt_schur_polynomial(const yt_partition* shape, size_t width,
                                     yt_poly** out);

/* Schur-basis expansions, partitions in reverse-lexicographic order. */
YT_API yt_status yt_schur_expand(const yt_poly* p, yt_expansion** out);
/* Expansion of s_lambda * s_mu at width |lambda| + |mu|. */
YT_API yt_status yt_expand_product(const yt_partition* lambda,
                                   const yt_partition* mu, yt_expansion** out);
YT_API void yt_expansion_free(yt_expansion* e);
YT_API size_t yt_expansion_size(const yt_expansion* e);
YT_API yt_status yt_expansion_entry(const yt_expansion* e, size_t index,
                                    yt_partition** shape, char** coefficient);
/* Coefficient of s_shape; "0" when absent. */
YT_API yt_status yt_expansion_coefficient(const yt_expansion* e,
                                          const yt_partition* shape,
                                          char** coefficient);

/* C^nu_{lambda,mu} by the Littlewood-Richardson rule. */
YT_API yt_status yt_lr_coefficient(const yt_partition* lambda,
                                   const yt_partition* mu,
                                   const yt_partition* nu, char** out);

/* Permutations in one-line notation: "21453" or "2,1,4,5,3". */
YT_API yt_status yt_permutation_parse(const char* text, yt_permutation** out);
YT_API yt_status yt_permutation_from_images(const uint32_t* images, size_t n,
                                            yt_permutation** out);
YT_API void yt_permutation_free(yt_permutation* p);
YT_API size_t yt_permutation_size(const yt_permutation* p);
/* sigma(i) for 1 <= i <= n. */
YT_API uint32_t yt_permutation_image(const yt_permutation* p, size_t i);
YT_API yt_status yt_permutation_to_string(const yt_permutation* p, char** out);
YT_API yt_status yt_permutation_inverse(const yt_permutation* p,
                                        yt_permutation** out);

/* Row insertion into a straight-shape tableau; reports the new box. */
YT_API yt_status yt_row_insert(const yt_filling* t, uint32_t value,
                               yt_filling** out, size_t* row, size_t* col);
YT_API yt_status yt_rsk(const yt_permutation* sigma, yt_filling** insertion,
                        yt_filling** recording);
YT_API yt_status yt_inverse_rsk(const yt_filling* insertion,
                                const yt_filling* recording,
                                yt_permutation** out);
/* n+1 snapshots starting from the pair of empty tableaux. */
YT_API yt_status yt_rsk_trace_new(const yt_permutation* sigma,
                                  yt_rsk_trace** out);
YT_API void yt_rsk_trace_free(yt_rsk_trace* trace);
YT_API size_t yt_rsk_trace_length(const yt_rsk_trace* trace);
YT_API yt_status yt_rsk_trace_step(const yt_rsk_trace* trace, size_t step,
                                   yt_filling** insertion,
                                   yt_filling** recording);
YT_API yt_status yt_lis_length(const yt_permutation* sigma, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* YOUNGTAB_H */
