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

#ifndef PESTLAB_GF2M_HPP
#define PESTLAB_GF2M_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pestlab/group.hpp"

namespace pestlab {

// An element of F_{2^m} in polynomial-basis coordinates: bit i is the
// coefficient of x^i modulo the field polynomial.
struct FieldElement {
  Mask bits = 0;

  friend constexpr FieldElement operator+(FieldElement x, FieldElement y) {
    return FieldElement{x.bits ^ y.bits};
  }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// The field F_{2^m} = GF(2)[x] / (modulus). Immutable once constructed.
class FieldSpec {
 public:
  int degree() const { return m_; }
  Mask modulus() const { return modulus_; }
  std::size_t order() const { return std::size_t{1} << m_; }
  bool contains(FieldElement a) const { return (a.bits >> m_) == 0; }

  // True when x generates the multiplicative group.
  bool is_primitive() const { return primitive_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend FieldSpec make_field(int m, std::optional<Mask> modulus);
  FieldSpec(int m, Mask modulus, bool primitive)
      : m_(m), modulus_(modulus), primitive_(primitive) {}

  int m_;
  Mask modulus_;
  bool primitive_;
};

// Validates (or picks) the field polynomial. Without a modulus the smallest
// irreducible of degree m by bit value is used; polynomials with a zero
// constant term are never accepted, so m = 1 yields x + 1.
FieldSpec make_field(int m, std::optional<Mask> modulus = std::nullopt);

// Irreducibility over GF(2) by trial division with every polynomial of
// degree 1 .. deg/2.
bool is_irreducible(Mask poly);
Mask smallest_irreducible(int m);
int poly_degree(std::uint64_t poly);

FieldElement mul(const FieldSpec& field, FieldElement a, FieldElement b);
FieldElement square(const FieldSpec& field, FieldElement a);
FieldElement pow(const FieldSpec& field, FieldElement a, std::uint64_t exponent);
FieldElement inv(const FieldSpec& field, FieldElement a);  // kZeroInverse on 0
int trace(const FieldSpec& field, FieldElement a);

// Table log[a] = k with x^k = a for a != 0; empty when the modulus is not
// primitive.
std::vector<std::uint32_t> discrete_log_table(const FieldSpec& field);

// A trace-orthogonal (self-dual) basis alpha_1 .. alpha_m:
// Tr(alpha_i alpha_j) = [i == j]. Coordinates follow the group convention,
// so alpha_1 is the most significant coordinate bit.
class TobBasis {
 public:
  // Validates the Gram conditions; kInvalidArgument if they fail.
  static TobBasis from_elements(const FieldSpec& field, std::vector<FieldElement> alphas);

  const FieldSpec& field() const { return field_; }
  int dimension() const { return field_.degree(); }
  std::span<const FieldElement> elements() const { return alphas_; }

  // x_i = Tr(alpha_i x).
  GroupElement coords(FieldElement x) const;
  FieldElement expand(GroupElement v) const;

 private:
  TobBasis(FieldSpec field, std::vector<FieldElement> alphas)
      : field_(field), alphas_(std::move(alphas)) {}

  FieldSpec field_;
  std::vector<FieldElement> alphas_;
};

TobBasis trace_orthogonal_basis(const FieldSpec& field);

}  // namespace pestlab

#endif  // PESTLAB_GF2M_HPP
