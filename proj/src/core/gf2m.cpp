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

#include "pestlab/gf2m.hpp"

#include <bit>
#include <string>

#include "pestlab/error.hpp"

namespace pestlab {
namespace {

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = poly_degree(p);
  for (int da = poly_degree(a); da >= dp; da = poly_degree(a)) {
    a ^= p << (da - dp);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool x_is_primitive(const FieldSpec& field) {
  const std::uint64_t group = field.order() - 1;
  const FieldElement x{field.degree() == 1 ? 1U : 2U};
  if (field.degree() == 1) return true;  // GF(2)^* is trivial
  for (std::uint64_t p : prime_factors(group)) {
    if (pow(field, x, group / p) == FieldElement{1}) return false;
  }
  return true;
}

int bilinear(const FieldSpec& field, FieldElement x, FieldElement y) {
  return trace(field, mul(field, x, y));
}

}  // namespace

int poly_degree(std::uint64_t poly) {
  return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

bool is_irreducible(Mask poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

Mask smallest_irreducible(int m) {
  check_dimension(m);
  // Odd constant term only: a root of x is 0, which cannot generate a field.
  for (Mask p = (Mask{1} << m) | 1U; p < (Mask{2} << m); p += 2) {
    if (is_irreducible(p)) return p;
  }
  fail(ErrorCode::kInternal, "no irreducible polynomial of degree " + std::to_string(m));
}

FieldSpec make_field(int m, std::optional<Mask> modulus) {
  check_dimension(m);
  Mask p = modulus.value_or(0);
  if (modulus) {
    if (poly_degree(p) != m) {
      fail(ErrorCode::kDegreeMismatch, "modulus degree " + std::to_string(poly_degree(p)) +
                                           " does not match m = " + std::to_string(m));
    }
    if ((p & 1U) == 0 || !is_irreducible(p)) {
      fail(ErrorCode::kReducibleModulus, "modulus is not irreducible over GF(2)");
    }
  } else {
    p = smallest_irreducible(m);
  }
  FieldSpec field(m, p, false);
  field.primitive_ = x_is_primitive(field);
  return field;
}

FieldElement mul(const FieldSpec& field, FieldElement a, FieldElement b) {
  return FieldElement{static_cast<Mask>(poly_mod(clmul(a.bits, b.bits), field.modulus()))};
}

FieldElement square(const FieldSpec& field, FieldElement a) { return mul(field, a, a); }

FieldElement pow(const FieldSpec& field, FieldElement a, std::uint64_t exponent) {
  FieldElement result{1};
  while (exponent != 0) {
    if (exponent & 1U) result = mul(field, result, a);
    a = square(field, a);
    exponent >>= 1;
  }
  return result;
}

FieldElement inv(const FieldSpec& field, FieldElement a) {
  if (a.bits == 0) fail(ErrorCode::kZeroInverse, "zero has no multiplicative inverse");
  return pow(field, a, field.order() - 2);
}

int trace(const FieldSpec& field, FieldElement a) {
  FieldElement sum{0};
  FieldElement conj = a;
  for (int i = 0; i < field.degree(); ++i) {
    sum = sum + conj;
    conj = square(field, conj);
  }
  ensure(sum.bits <= 1, "trace left the prime field");
  return static_cast<int>(sum.bits);
}

std::vector<std::uint32_t> discrete_log_table(const FieldSpec& field) {
  if (!field.is_primitive()) return {};
  std::vector<std::uint32_t> log(field.order(), 0);
  const FieldElement x{field.degree() == 1 ? 1U : 2U};
  FieldElement power{1};
  for (std::uint32_t k = 0; k + 1 < field.order(); ++k) {
    log[power.bits] = k;
    power = mul(field, power, x);
  }
  return log;
}

TobBasis TobBasis::from_elements(const FieldSpec& field, std::vector<FieldElement> alphas) {
  const auto m = static_cast<std::size_t>(field.degree());
  if (alphas.size() != m) {
    fail(ErrorCode::kInvalidArgument, "basis needs exactly m = " + std::to_string(m) + " elements");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!field.contains(alphas[i])) fail(ErrorCode::kInvalidArgument, "basis element outside the field");
    for (std::size_t j = i; j < m; ++j) {
      const int expected = i == j ? 1 : 0;
      if (bilinear(field, alphas[i], alphas[j]) != expected) {
        fail(ErrorCode::kInvalidArgument, "basis is not trace-orthogonal at (" + std::to_string(i + 1) +
                                              ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  return TobBasis(field, std::move(alphas));
}

GroupElement TobBasis::coords(FieldElement x) const {
  const int m = dimension();
  Mask bits = 0;
  for (int i = 0; i < m; ++i) {
    if (bilinear(field_, alphas_[static_cast<std::size_t>(i)], x)) bits |= Mask{1} << (m - 1 - i);
  }
  return GroupElement{bits};
}

FieldElement TobBasis::expand(GroupElement v) const {
  const int m = dimension();
  FieldElement x{0};
  for (int i = 0; i < m; ++i) {
    if ((v.bits >> (m - 1 - i)) & 1U) x = x + alphas_[static_cast<std::size_t>(i)];
  }
  return x;
}

// Orthonormalization of the trace form Tr(xy), starting from the polynomial
// basis. The diagonal Tr(x^2) = Tr(x) is additive, so if no remaining vector
// has Tr = 1 the form on the remainder is alternating; a hyperbolic pair
// (w1, w2) is then merged with the last chosen vector u into the orthonormal
// triple u+w1, u+w2, u+w1+w2.
TobBasis trace_orthogonal_basis(const FieldSpec& field) {
  const int m = field.degree();
  std::vector<FieldElement> rest;
  for (int i = 0; i < m; ++i) rest.push_back(FieldElement{Mask{1} << i});

  std::vector<FieldElement> chosen;
  while (!rest.empty()) {
    std::size_t pivot = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (trace(field, rest[i]) == 1) {
        pivot = i;
        break;
      }
    }
    if (pivot != rest.size()) {
      const FieldElement v = rest[pivot];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& w : rest) {
        if (bilinear(field, w, v)) w = w + v;
      }
      chosen.push_back(v);
      continue;
    }

    if (chosen.empty() || rest.size() < 2) {
      fail(ErrorCode::kSearchExhausted, "trace-orthogonal basis search failed");
    }
    const FieldElement w1 = rest.front();
    std::size_t partner = rest.size();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (bilinear(field, w1, rest[i])) {
        partner = i;
        break;
      }
    }
    if (partner == rest.size()) fail(ErrorCode::kSearchExhausted, "trace form is degenerate");
    const FieldElement w2 = rest[partner];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(partner));
    rest.erase(rest.begin());
    for (auto& w : rest) {
      const int b1 = bilinear(field, w, w1);
      const int b2 = bilinear(field, w, w2);
      if (b2) w = w + w1;
      if (b1) w = w + w2;
    }
    const FieldElement u = chosen.back();
    chosen.pop_back();
    chosen.push_back(u + w1);
    chosen.push_back(u + w2);
    chosen.push_back(u + w1 + w2);
  }
  return TobBasis::from_elements(field, std::move(chosen));
}

}  // namespace pestlab
