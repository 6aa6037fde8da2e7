#include "youngtab/youngtab.h"

#include <cstring>
#include <functional>
#include <iterator>
#include <new>
#include <string>

#include "youngtab/error.hpp"
#include "youngtab/lr_rule.hpp"
#include "youngtab/partition.hpp"
#include "youngtab/schensted.hpp"
#include "youngtab/sympoly.hpp"
#include "youngtab/tableau.hpp"

using namespace youngtab;

struct yt_partition {
  Partition value;
};
struct yt_partition_iter {
  PartitionGenerator gen;
};
struct yt_filling {
  Filling value;
};
struct yt_filling_iter {
  std::function<std::optional<Filling>()> next;
};
struct yt_poly {
  SparsePolynomial value;
};
struct yt_expansion {
  SchurExpansion value;
};
struct yt_permutation {
  Permutation value;
};
struct yt_rsk_trace {
  std::vector<RskPair> steps;
};

namespace {

thread_local std::string last_error;

yt_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return YT_ERR_PARSE;
    case ErrorCode::NotWeaklyDecreasing: return YT_ERR_NOT_WEAKLY_DECREASING;
    case ErrorCode::NotContained: return YT_ERR_NOT_CONTAINED;
    case ErrorCode::InvalidBox: return YT_ERR_INVALID_BOX;
    case ErrorCode::EntryExceedsBound: return YT_ERR_ENTRY_EXCEEDS_BOUND;
    case ErrorCode::MalformedFilling: return YT_ERR_MALFORMED_FILLING;
    case ErrorCode::WidthMismatch: return YT_ERR_WIDTH_MISMATCH;
    case ErrorCode::NotSymmetric: return YT_ERR_NOT_SYMMETRIC;
    case ErrorCode::NotHomogeneous: return YT_ERR_NOT_HOMOGENEOUS;
    case ErrorCode::MalformedPair: return YT_ERR_MALFORMED_PAIR;
    case ErrorCode::InvalidArgument: return YT_ERR_INVALID_ARGUMENT;
    case ErrorCode::GuardExceeded: return YT_ERR_GUARD_EXCEEDED;
    case ErrorCode::Internal: return YT_ERR_INTERNAL;
  }
  return YT_ERR_INTERNAL;
}

yt_status fail(yt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
yt_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(YT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(YT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(YT_ERR_INTERNAL, "unknown exception");
  }
}

yt_status null_argument() {
  return fail(YT_ERR_INVALID_ARGUMENT, "null argument");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

yt_filling_iter* make_iter(auto gen) {
  return new yt_filling_iter{
      [g = std::move(gen)]() mutable -> std::optional<Filling> {
        return g.next();
      }};
}

}  // namespace

extern "C" {

const char* yt_version(void) { return "0.1.0"; }

const char* yt_status_name(yt_status status) {
  switch (status) {
    case YT_OK: return "ok";
    case YT_DONE: return "done";
    case YT_ERR_PARSE: return "parse error";
    case YT_ERR_NOT_WEAKLY_DECREASING: return "not weakly decreasing";
    case YT_ERR_NOT_CONTAINED: return "not contained";
    case YT_ERR_INVALID_BOX: return "invalid box";
    case YT_ERR_ENTRY_EXCEEDS_BOUND: return "entry exceeds bound";
    case YT_ERR_MALFORMED_FILLING: return "malformed filling";
    case YT_ERR_WIDTH_MISMATCH: return "width mismatch";
    case YT_ERR_NOT_SYMMETRIC: return "not symmetric";
    case YT_ERR_NOT_HOMOGENEOUS: return "not homogeneous";
    case YT_ERR_MALFORMED_PAIR: return "malformed pair";
    case YT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case YT_ERR_GUARD_EXCEEDED: return "size guard exceeded";
    case YT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* yt_last_error_message(void) { return last_error.c_str(); }

void yt_string_free(char* s) { delete[] s; }

// ---------------------------------------------------------------------------
// Partitions

yt_status yt_partition_parse(const char* text, yt_partition** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    *out = new yt_partition{Partition::parse(text)};
    return YT_OK;
  });
}

yt_status yt_partition_from_parts(const uint32_t* parts, size_t count,
                                  yt_partition** out) {
  if ((!parts && count) || !out) return null_argument();
  return guarded([&] {
    *out = new yt_partition{
        Partition::from_parts(std::span<const Part>(parts, count))};
    return YT_OK;
  });
}

yt_status yt_partition_clone(const yt_partition* p, yt_partition** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = new yt_partition{p->value};
    return YT_OK;
  });
}

void yt_partition_free(yt_partition* p) { delete p; }

size_t yt_partition_num_rows(const yt_partition* p) {
  return p ? p->value.num_rows() : 0;
}

uint32_t yt_partition_part(const yt_partition* p, size_t row) {
  return p ? p->value.part(row) : 0;
}

uint64_t yt_partition_size(const yt_partition* p) {
  return p ? p->value.size() : 0;
}

yt_status yt_partition_to_string(const yt_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(p->value.to_string());
    return YT_OK;
  });
}

int yt_partition_equal(const yt_partition* a, const yt_partition* b) {
  return a && b && a->value == b->value;
}

int yt_partition_contains(const yt_partition* inner, const yt_partition* outer) {
  return inner && outer && contains(inner->value, outer->value);
}

yt_status yt_partition_conjugate(const yt_partition* p, yt_partition** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = new yt_partition{conjugate(p->value)};
    return YT_OK;
  });
}

yt_status yt_hook_length(const yt_partition* p, size_t row, size_t col,
                         uint64_t* out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = hook_length(p->value, {row, col});
    return YT_OK;
  });
}

yt_status yt_count_standard(const yt_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(count_standard(p->value).str());
    return YT_OK;
  });
}

yt_status yt_partitions_of(uint32_t n, yt_partition_iter** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new yt_partition_iter{PartitionGenerator(n)};
    return YT_OK;
  });
}

yt_status yt_partition_iter_next(yt_partition_iter* it, yt_partition** out) {
  if (!it || !out) return null_argument();
  return guarded([&] {
    auto p = it->gen.next();
    if (!p) return YT_DONE;
    *out = new yt_partition{std::move(*p)};
    return YT_OK;
  });
}

void yt_partition_iter_free(yt_partition_iter* it) { delete it; }

// ---------------------------------------------------------------------------
// Fillings

yt_status yt_filling_parse(const char* text, yt_filling** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    *out = new yt_filling{Filling::parse(text)};
    return YT_OK;
  });
}

void yt_filling_free(yt_filling* t) { delete t; }

yt_status yt_filling_clone(const yt_filling* t, yt_filling** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    *out = new yt_filling{t->value};
    return YT_OK;
  });
}

yt_status yt_filling_outer(const yt_filling* t, yt_partition** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    *out = new yt_partition{t->value.shape().outer()};
    return YT_OK;
  });
}

yt_status yt_filling_inner(const yt_filling* t, yt_partition** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    *out = new yt_partition{t->value.shape().inner()};
    return YT_OK;
  });
}

size_t yt_filling_num_rows(const yt_filling* t) {
  return t ? t->value.rows().size() : 0;
}

size_t yt_filling_row_length(const yt_filling* t, size_t row) {
  if (!t || row >= t->value.rows().size()) return 0;
  return t->value.rows()[row].size();
}

size_t yt_filling_row_offset(const yt_filling* t, size_t row) {
  return t ? t->value.shape().row_begin(row) : 0;
}

uint32_t yt_filling_entry(const yt_filling* t, size_t row, size_t index) {
  if (!t || row >= t->value.rows().size() ||
      index >= t->value.rows()[row].size()) {
    return 0;
  }
  return t->value.rows()[row][index];
}

uint64_t yt_filling_num_boxes(const yt_filling* t) {
  return t ? t->value.num_boxes() : 0;
}

yt_status yt_filling_render(const yt_filling* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(t->value.render());
    return YT_OK;
  });
}

int yt_filling_equal(const yt_filling* a, const yt_filling* b) {
  return a && b && a->value == b->value;
}

int yt_filling_is_semistandard(const yt_filling* t) {
  return t && is_semistandard(t->value);
}

int yt_filling_is_standard(const yt_filling* t) {
  return t && is_standard(t->value);
}

yt_status yt_filling_weight(const yt_filling* t, uint32_t bound,
                            uint32_t* counts) {
  if (!t || (!counts && bound)) return null_argument();
  return guarded([&] {
    WeightVector w = weight(t->value, bound);
    std::copy(w.counts.begin(), w.counts.end(), counts);
    return YT_OK;
  });
}

yt_status yt_filling_reverse_reading_word(const yt_filling* t,
                                          uint32_t* letters, size_t capacity,
                                          size_t* length) {
  if (!t || !length || (!letters && capacity)) return null_argument();
  return guarded([&] {
    ReadingWord w = reverse_reading_word(t->value);
    std::copy_n(w.letters.begin(), std::min(capacity, w.letters.size()),
                letters);
    *length = w.letters.size();
    return YT_OK;
  });
}

int yt_is_lattice_word(const uint32_t* letters, size_t length) {
  if (!letters && length) return 0;
  return is_lattice(std::span<const Entry>(letters, length));
}

yt_status yt_bender_knuth(const yt_filling* t, uint32_t i, yt_filling** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    *out = new yt_filling{bender_knuth(t->value, i)};
    return YT_OK;
  });
}

yt_status yt_enumerate_ssyt(const yt_partition* outer,
                            const yt_partition* inner, uint32_t bound,
                            yt_filling_iter** out) {
  if (!outer || !out) return null_argument();
  return guarded([&] {
    SkewShape shape = inner ? skew(outer->value, inner->value)
                            : SkewShape(outer->value);
    *out = make_iter(SsytEnumerator(std::move(shape), bound));
    return YT_OK;
  });
}

yt_status yt_enumerate_syt(const yt_partition* shape, yt_filling_iter** out) {
  if (!shape || !out) return null_argument();
  return guarded([&] {
    *out = make_iter(SytEnumerator(shape->value));
    return YT_OK;
  });
}

yt_status yt_enumerate_lr(const yt_partition* outer, const yt_partition* inner,
                          const yt_partition* content, yt_filling_iter** out) {
  if (!outer || !inner || !content || !out) return null_argument();
  return guarded([&] {
    *out = new yt_filling_iter{
        [g = LrEnumerator(outer->value, inner->value, content->value)]() mutable
        -> std::optional<Filling> {
          auto w = g.next();
          if (!w) return std::nullopt;
          return std::move(w->filling);
        }};
    return YT_OK;
  });
}

yt_status yt_filling_iter_next(yt_filling_iter* it, yt_filling** out) {
  if (!it || !out) return null_argument();
  return guarded([&] {
    auto t = it->next();
    if (!t) return YT_DONE;
    *out = new yt_filling{std::move(*t)};
    return YT_OK;
  });
}

void yt_filling_iter_free(yt_filling_iter* it) { delete it; }

// ---------------------------------------------------------------------------
// Polynomials

yt_status yt_poly_constant(size_t width, int64_t c, yt_poly** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new yt_poly{SparsePolynomial::constant(width, BigInt(c))};
    return YT_OK;
  });
}

yt_status yt_poly_variable(size_t width, size_t index, yt_poly** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new yt_poly{SparsePolynomial::variable(width, index)};
    return YT_OK;
  });
}

void yt_poly_free(yt_poly* p) { delete p; }

size_t yt_poly_width(const yt_poly* p) { return p ? p->value.width() : 0; }

size_t yt_poly_num_terms(const yt_poly* p) {
  return p ? p->value.terms().size() : 0;
}

yt_status yt_poly_term(const yt_poly* p, size_t index, uint32_t* exps,
                       char** coefficient) {
  if (!p || !exps) return null_argument();
  if (index >= p->value.terms().size()) {
    return fail(YT_ERR_INVALID_ARGUMENT, "term index out of range");
  }
  return guarded([&] {
    auto it = std::next(p->value.terms().begin(),
                        static_cast<std::ptrdiff_t>(index));
    std::copy(it->first.begin(), it->first.end(), exps);
    if (coefficient) *coefficient = dup_string(it->second.str());
    return YT_OK;
  });
}

yt_status yt_poly_render(const yt_poly* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(p->value.render());
    return YT_OK;
  });
}

yt_status yt_poly_add(const yt_poly* a, const yt_poly* b, yt_poly** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] {
    *out = new yt_poly{a->value + b->value};
    return YT_OK;
  });
}

yt_status yt_poly_mul(const yt_poly* a, const yt_poly* b, yt_poly** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] {
    *out = new yt_poly{a->value * b->value};
    return YT_OK;
  });
}

int yt_poly_equal(const yt_poly* a, const yt_poly* b) {
  return a && b && a->value == b->value;
}

int yt_poly_is_symmetric(const yt_poly* p) {
  return p && is_symmetric(p->value);
}

yt_status yt_schur_polynomial(const yt_partition* shape, size_t width,
                              yt_poly** out) {
  if (!shape || !out) return null_argument();
  return guarded([&] {
    *out = new yt_poly{schur_polynomial(shape->value, width)};
    return YT_OK;
  });
}

yt_status yt_schur_expand(const yt_poly* p, yt_expansion** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = new yt_expansion{schur_expand(p->value)};
    return YT_OK;
  });
}

yt_status yt_expand_product(const yt_partition* lambda, const yt_partition* mu,
                            yt_expansion** out) {
  if (!lambda || !mu || !out) return null_argument();
  return guarded([&] {
    *out = new yt_expansion{expand_product(lambda->value, mu->value)};
    return YT_OK;
  });
}

void yt_expansion_free(yt_expansion* e) { delete e; }

size_t yt_expansion_size(const yt_expansion* e) {
  return e ? e->value.size() : 0;
}

yt_status yt_expansion_entry(const yt_expansion* e, size_t index,
                             yt_partition** shape, char** coefficient) {
  if (!e || !shape || !coefficient) return null_argument();
  if (index >= e->value.size()) {
    return fail(YT_ERR_INVALID_ARGUMENT, "expansion index out of range");
  }
  return guarded([&] {
    auto it = std::next(e->value.begin(), static_cast<std::ptrdiff_t>(index));
    auto* p = new yt_partition{it->first};
    *coefficient = dup_string(it->second.str());
    *shape = p;
    return YT_OK;
  });
}

yt_status yt_expansion_coefficient(const yt_expansion* e,
                                   const yt_partition* shape,
                                   char** coefficient) {
  if (!e || !shape || !coefficient) return null_argument();
  return guarded([&] {
    auto it = e->value.find(shape->value);
    *coefficient = dup_string(it == e->value.end() ? "0" : it->second.str());
    return YT_OK;
  });
}

yt_status yt_lr_coefficient(const yt_partition* lambda, const yt_partition* mu,
                            const yt_partition* nu, char** out) {
  if (!lambda || !mu || !nu || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(lr_coefficient(lambda->value, mu->value, nu->value).str());
    return YT_OK;
  });
}

// ---------------------------------------------------------------------------
// Permutations and the Schensted correspondence

yt_status yt_permutation_parse(const char* text, yt_permutation** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    *out = new yt_permutation{Permutation::parse(text)};
    return YT_OK;
  });
}

yt_status yt_permutation_from_images(const uint32_t* images, size_t n,
                                     yt_permutation** out) {
  if ((!images && n) || !out) return null_argument();
  return guarded([&] {
    *out = new yt_permutation{
        Permutation(std::vector<Entry>(images, images + n))};
    return YT_OK;
  });
}

void yt_permutation_free(yt_permutation* p) { delete p; }

size_t yt_permutation_size(const yt_permutation* p) {
  return p ? p->value.size() : 0;
}

uint32_t yt_permutation_image(const yt_permutation* p, size_t i) {
  if (!p || i == 0 || i > p->value.size()) return 0;
  return p->value(i);
}

yt_status yt_permutation_to_string(const yt_permutation* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(p->value.to_string());
    return YT_OK;
  });
}

yt_status yt_permutation_inverse(const yt_permutation* p,
                                 yt_permutation** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = new yt_permutation{p->value.inverse()};
    return YT_OK;
  });
}

yt_status yt_row_insert(const yt_filling* t, uint32_t value, yt_filling** out,
                        size_t* row, size_t* col) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    InsertionResult r = row_insert(t->value, value);
    if (row) *row = r.new_box.row;
    if (col) *col = r.new_box.col;
    *out = new yt_filling{std::move(r.tableau)};
    return YT_OK;
  });
}

yt_status yt_rsk(const yt_permutation* sigma, yt_filling** insertion,
                 yt_filling** recording) {
  if (!sigma || !insertion || !recording) return null_argument();
  return guarded([&] {
    RskPair pair = rsk(sigma->value);
    auto* p = new yt_filling{std::move(pair.insertion)};
    *recording = new yt_filling{std::move(pair.recording)};
    *insertion = p;
    return YT_OK;
  });
}

yt_status yt_inverse_rsk(const yt_filling* insertion,
                         const yt_filling* recording, yt_permutation** out) {
  if (!insertion || !recording || !out) return null_argument();
  return guarded([&] {
    *out = new yt_permutation{
        inverse_rsk(RskPair{insertion->value, recording->value})};
    return YT_OK;
  });
}

yt_status yt_rsk_trace_new(const yt_permutation* sigma, yt_rsk_trace** out) {
  if (!sigma || !out) return null_argument();
  return guarded([&] {
    *out = new yt_rsk_trace{rsk_trace(sigma->value)};
    return YT_OK;
  });
}

void yt_rsk_trace_free(yt_rsk_trace* trace) { delete trace; }

size_t yt_rsk_trace_length(const yt_rsk_trace* trace) {
  return trace ? trace->steps.size() : 0;
}

yt_status yt_rsk_trace_step(const yt_rsk_trace* trace, size_t step,
                            yt_filling** insertion, yt_filling** recording) {
  if (!trace || !insertion || !recording) return null_argument();
  if (step >= trace->steps.size()) {
    return fail(YT_ERR_INVALID_ARGUMENT, "trace step out of range");
  }
  return guarded([&] {
    auto* p = new yt_filling{trace->steps[step].insertion};
    *recording = new yt_filling{trace->steps[step].recording};
    *insertion = p;
    return YT_OK;
  });
}

yt_status yt_lis_length(const yt_permutation* sigma, uint64_t* out) {
  if (!sigma || !out) return null_argument();
  *out = lis_length(sigma->value);
  return YT_OK;
}

}  // extern "C"
