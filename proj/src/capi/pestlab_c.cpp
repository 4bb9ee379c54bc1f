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

#include "pestlab/pestlab.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "pestlab/boolfn.hpp"
#include "pestlab/constructions.hpp"
#include "pestlab/cubelike.hpp"
#include "pestlab/error.hpp"
#include "pestlab/gf2m.hpp"
#include "pestlab/oracle.hpp"
#include "pestlab/pestcheck.hpp"
#include "pestlab/serialize.hpp"
#include "pestlab/textio.hpp"

struct pest_field {
  pestlab::FieldSpec field;
  pestlab::TobBasis basis;
};

struct pest_conn_set {
  pestlab::ConnectionSet set;
};

struct pest_boolfn {
  pestlab::BooleanFunction f;
};

namespace {

thread_local std::string g_last_error;

pest_status to_status(pestlab::ErrorCode code) {
  using pestlab::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return PEST_E_INVALID_ARGUMENT;
    case ErrorCode::kReducibleModulus: return PEST_E_REDUCIBLE_MODULUS;
    case ErrorCode::kDegreeMismatch: return PEST_E_DEGREE_MISMATCH;
    case ErrorCode::kZeroInverse: return PEST_E_ZERO_INVERSE;
    case ErrorCode::kSearchExhausted: return PEST_E_SEARCH_EXHAUSTED;
    case ErrorCode::kBadParameters: return PEST_E_BAD_PARAMETERS;
    case ErrorCode::kDegeneratePair: return PEST_E_DEGENERATE_PAIR;
    case ErrorCode::kTooLarge: return PEST_E_TOO_LARGE;
    case ErrorCode::kNotBent: return PEST_E_NOT_BENT;
    case ErrorCode::kWrongParity: return PEST_E_WRONG_PARITY;
    case ErrorCode::kAllOnesValueZero: return PEST_E_ALL_ONES_VALUE_ZERO;
    case ErrorCode::kEmptySupport: return PEST_E_EMPTY_SUPPORT;
    case ErrorCode::kZeroElement: return PEST_E_ZERO_ELEMENT;
    case ErrorCode::kWidthMismatch: return PEST_E_WIDTH_MISMATCH;
    case ErrorCode::kParse: return PEST_E_PARSE;
    case ErrorCode::kVerificationFailed: return PEST_E_VERIFICATION_FAILED;
    case ErrorCode::kInternal: return PEST_E_INTERNAL;
  }
  return PEST_E_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
pest_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return PEST_OK;
  } catch (const pestlab::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PEST_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PEST_E_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** json, const pestlab::Json& doc) {
  if (json != nullptr) *json = copy_string(doc.dump());
}

pestlab::EdgeStatePair to_pair(const pest_conn_set* set, pest_pair p) {
  const int m = set->set.dimension();
  const pestlab::EdgeStatePair pair{{p.a}, {p.b}, {p.c}, {p.d}};
  for (auto x : {pair.a, pair.b, pair.c, pair.d}) {
    if (!pestlab::fits(x, m)) throw pestlab::Error(pestlab::ErrorCode::kWidthMismatch, "pair element wider than m");
  }
  return pair;
}

}  // namespace

extern "C" {

const char* pest_version(void) { return "0.1.0"; }

const char* pest_last_error(void) { return g_last_error.c_str(); }

const char* pest_status_name(pest_status status) {
  switch (status) {
    case PEST_OK: return "OK";
    case PEST_E_NULL_POINTER: return "NullPointer";
    default: break;
  }
  if (status > PEST_OK && status <= PEST_E_INTERNAL) {
    return pestlab::error_code_name(static_cast<pestlab::ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

void pest_string_free(char* s) { delete[] s; }

pest_status pest_parse_element(const char* text, int m, uint32_t* out) {
  if (text == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = pestlab::parse_element(text, m).bits; });
}

pest_status pest_parse_pair(const char* text, int m, pest_pair* out) {
  if (text == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto p = pestlab::parse_pair(text, m);
    *out = pest_pair{p.a.bits, p.b.bits, p.c.bits, p.d.bits};
  });
}

pest_status pest_parse_pi_coefficient(const char* text, int64_t* num, int64_t* den) {
  if (text == nullptr || num == nullptr || den == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto q = pestlab::parse_pi_coefficient(text);
    *num = q.numerator();
    *den = q.denominator();
  });
}

pest_status pest_field_create(int m, uint32_t modulus, pest_field** out) {
  if (out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    auto field = pestlab::make_field(m, modulus == 0 ? std::nullopt : std::optional<pestlab::Mask>(modulus));
    auto basis = pestlab::trace_orthogonal_basis(field);
    *out = new pest_field{field, std::move(basis)};
  });
}

void pest_field_destroy(pest_field* field) { delete field; }

int pest_field_degree(const pest_field* field) { return field == nullptr ? 0 : field->field.degree(); }

uint32_t pest_field_modulus(const pest_field* field) { return field == nullptr ? 0 : field->field.modulus(); }

pest_status pest_field_mul(const pest_field* field, uint32_t a, uint32_t b, uint32_t* out) {
  if (field == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = pestlab::mul(field->field, {a}, {b}).bits; });
}

pest_status pest_field_inv(const pest_field* field, uint32_t a, uint32_t* out) {
  if (field == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = pestlab::inv(field->field, {a}).bits; });
}

pest_status pest_field_trace(const pest_field* field, uint32_t a, int* out) {
  if (field == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = pestlab::trace(field->field, {a}); });
}

pest_status pest_field_set_basis(pest_field* field, const uint32_t* alphas, size_t count) {
  if (field == nullptr || alphas == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    std::vector<pestlab::FieldElement> elems;
    for (size_t i = 0; i < count; ++i) elems.push_back({alphas[i]});
    field->basis = pestlab::TobBasis::from_elements(field->field, std::move(elems));
  });
}

pest_status pest_field_basis(const pest_field* field, uint32_t* alphas, size_t capacity) {
  if (field == nullptr || alphas == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto elems = field->basis.elements();
    if (capacity < elems.size()) throw pestlab::Error(pestlab::ErrorCode::kInvalidArgument, "buffer too small");
    for (size_t i = 0; i < elems.size(); ++i) alphas[i] = elems[i].bits;
  });
}

pest_status pest_field_coords(const pest_field* field, uint32_t x, uint32_t* out) {
  if (field == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    if (!field->field.contains({x})) throw pestlab::Error(pestlab::ErrorCode::kWidthMismatch, "element outside the field");
    *out = field->basis.coords({x}).bits;
  });
}

pest_status pest_field_expand(const pest_field* field, uint32_t v, uint32_t* out) {
  if (field == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    if (!pestlab::fits({v}, field->field.degree())) {
      throw pestlab::Error(pestlab::ErrorCode::kWidthMismatch, "vector wider than m");
    }
    *out = field->basis.expand({v}).bits;
  });
}

pest_status pest_field_basis_json(const pest_field* field, char** json) {
  if (field == nullptr || json == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { emit(json, pestlab::basis_json(field->basis)); });
}

pest_status pest_conn_set_parse(const char* text, int m, pest_conn_set** out, char** warnings) {
  if (text == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    auto parsed = pestlab::parse_support_text(text, m == 0 ? std::nullopt : std::optional<int>(m));
    if (warnings != nullptr) {
      std::string all;
      for (const auto& w : parsed.warnings) all += w + "\n";
      *warnings = all.empty() ? nullptr : copy_string(all);
    }
    *out = new pest_conn_set{std::move(parsed.set)};
  });
}

pest_status pest_conn_set_create(int m, const uint32_t* masks, size_t count, pest_conn_set** out) {
  if (out == nullptr || (masks == nullptr && count > 0)) return PEST_E_NULL_POINTER;
  return guarded([&] {
    std::vector<pestlab::GroupElement> members;
    for (size_t i = 0; i < count; ++i) members.push_back({masks[i]});
    *out = new pest_conn_set{pestlab::ConnectionSet(m, std::move(members))};
  });
}

void pest_conn_set_destroy(pest_conn_set* set) { delete set; }

int pest_conn_set_dimension(const pest_conn_set* set) { return set == nullptr ? 0 : set->set.dimension(); }

size_t pest_conn_set_size(const pest_conn_set* set) { return set == nullptr ? 0 : set->set.size(); }

pest_status pest_conn_set_members(const pest_conn_set* set, uint32_t* out, size_t capacity) {
  if (set == nullptr || (out == nullptr && set->set.size() > 0)) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto members = set->set.members();
    if (capacity < members.size()) throw pestlab::Error(pestlab::ErrorCode::kInvalidArgument, "buffer too small");
    for (size_t i = 0; i < members.size(); ++i) out[i] = members[i].bits;
  });
}

int pest_conn_set_is_connected(const pest_conn_set* set) {
  return set != nullptr && pestlab::is_connected(set->set) ? 1 : 0;
}

pest_status pest_spectrum(const pest_conn_set* set, int64_t* lambda, size_t capacity) {
  if (set == nullptr || lambda == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto spec = pestlab::spectrum(set->set);
    if (capacity < spec.lambda.size()) throw pestlab::Error(pestlab::ErrorCode::kInvalidArgument, "buffer too small");
    std::copy(spec.lambda.begin(), spec.lambda.end(), lambda);
  });
}

pest_status pest_spectrum_json(const pest_conn_set* set, char** json) {
  if (set == nullptr || json == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { emit(json, pestlab::spectrum_json(set->set, pestlab::spectrum(set->set))); });
}

pest_status pest_boolfn_parse_truth_table(const char* text, int m, pest_boolfn** out) {
  if (text == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    *out = new pest_boolfn{pestlab::parse_truth_table(text, m == 0 ? std::nullopt : std::optional<int>(m))};
  });
}

pest_status pest_boolfn_from_conn_set(const pest_conn_set* set, pest_boolfn** out) {
  if (set == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = new pest_boolfn{pestlab::indicator(set->set)}; });
}

pest_status pest_boolfn_gold(const pest_field* field, unsigned e, pest_boolfn** out) {
  if (field == nullptr || out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = new pest_boolfn{pestlab::gold_function(field->basis, e)}; });
}

pest_status pest_boolfn_inner_product(int k, uint32_t linear_mask, int affine_bit, pest_boolfn** out) {
  if (out == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { *out = new pest_boolfn{pestlab::inner_product_bent(k, {linear_mask}, affine_bit)}; });
}

void pest_boolfn_destroy(pest_boolfn* f) { delete f; }

int pest_boolfn_dimension(const pest_boolfn* f) { return f == nullptr ? 0 : f->f.dimension(); }

pest_status pest_boolfn_wht(const pest_boolfn* f, int64_t* values, size_t capacity) {
  if (f == nullptr || values == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto w = pestlab::wht(f->f);
    if (capacity < w.values.size()) throw pestlab::Error(pestlab::ErrorCode::kInvalidArgument, "buffer too small");
    std::copy(w.values.begin(), w.values.end(), values);
  });
}

pest_status pest_boolfn_wht_json(const pest_boolfn* f, char** json) {
  if (f == nullptr || json == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] { emit(json, pestlab::walsh_json(pestlab::wht(f->f), pestlab::classify(f->f))); });
}

pest_status pest_check(const pest_conn_set* set, pest_pair pair, int* positive, char** json) {
  if (set == nullptr || positive == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto cert = pestlab::check_pest(set->set, to_pair(set, pair));
    emit(json, pestlab::certificate_json(cert));
    *positive = cert.positive ? 1 : 0;
  });
}

pest_status pest_search(const pest_conn_set* set, uint32_t a, uint32_t b, size_t* count, char** json) {
  if (set == nullptr || count == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto partners = pestlab::find_pest_partners(set->set, {a}, {b});
    emit(json, pestlab::partners_json(set->set, {a}, {b}, partners));
    *count = partners.size();
  });
}

pest_status pest_transfer_amplitude(const pest_conn_set* set, pest_pair pair, double t, double* re, double* im) {
  if (set == nullptr || re == nullptr || im == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto z = pestlab::transfer_amplitude(set->set, t, to_pair(set, pair));
    *re = z.real();
    *im = z.imag();
  });
}

pest_status pest_verify_at(const pest_conn_set* set, pest_pair pair, int64_t t_num, int64_t t_den, double tolerance,
                           int* hit, char** json) {
  if (set == nullptr || hit == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    if (t_den <= 0) throw pestlab::Error(pestlab::ErrorCode::kInvalidArgument, "time denominator must be positive");
    const auto p = to_pair(set, pair);
    const auto report = pestlab::fidelity_at(set->set, p, pestlab::Rational(t_num, t_den), tolerance);
    emit(json, pestlab::fidelity_json(set->set, p, report));
    *hit = report.is_hit() ? 1 : 0;
  });
}

pest_status pest_verify_sweep(const pest_conn_set* set, pest_pair pair, double tolerance, int* hit, char** json) {
  if (set == nullptr || hit == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    const auto p = to_pair(set, pair);
    const auto sweep = pestlab::sweep_candidate_times(set->set, p, tolerance);
    emit(json, pestlab::sweep_json(set->set, p, sweep));
    *hit = sweep.hits.empty() ? 0 : 1;
  });
}

pest_status pest_lift_bent(const pest_boolfn* f, int allow_small_k, char** json) {
  if (f == nullptr || json == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    emit(json, pestlab::lift_json(pestlab::bent_lift_certificate(f->f, {allow_small_k != 0})));
  });
}

pest_status pest_lift_semibent(const pest_field* field, unsigned e, int allow_small_k, char** json) {
  if (field == nullptr || json == nullptr) return PEST_E_NULL_POINTER;
  return guarded([&] {
    emit(json, pestlab::lift_json(pestlab::semibent_lift_certificate(field->basis, e, {allow_small_k != 0})));
  });
}

}  // extern "C"
