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

#ifndef PESTLAB_BOOLFN_HPP
#define PESTLAB_BOOLFN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pestlab/gf2m.hpp"
#include "pestlab/group.hpp"

namespace pestlab {

// f : F_2^m -> F_2 as a truth table indexed by the group-element mask.
class BooleanFunction {
 public:
  BooleanFunction(int m, std::vector<std::uint8_t> table);

  static BooleanFunction zero(int m);

  int dimension() const { return m_; }
  std::span<const std::uint8_t> table() const { return table_; }
  int operator()(GroupElement x) const { return table_[x.bits]; }
  std::size_t weight() const;

  BooleanFunction complement() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int m_;
  std::vector<std::uint8_t> table_;
};

// values[a] = sum_x (-1)^{f(x) + a.x}
struct WalshSpectrum {
  int m = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator[](GroupElement a) const { return values[a.bits]; }
};

// Unnormalized Sylvester-Hadamard transform, in place, O(n log n).
// out[a] = sum_x (-1)^{a.x} in[x].
void hadamard_transform(std::span<std::int64_t> data);

WalshSpectrum wht(const BooleanFunction& f);

// Ascending by mask.
std::vector<GroupElement> support(const BooleanFunction& f);
BooleanFunction from_support(int m, std::span<const GroupElement> elements);

enum class FunctionClass { kBent, kSemiBent, kPlateaued, kOther };

struct Classification {
  FunctionClass kind = FunctionClass::kOther;
  // |f^(a)| over the nonzero values, for every kind but kOther.
  std::int64_t amplitude = 0;
  // Set for kBent only: f^(x) = 2^k (-1)^{dual(x)}.
  std::optional<BooleanFunction> dual;
};

// Semi-bent amplitude is 2^{(m+1)/2} for odd m and 2^{m/2+1} for even m.
Classification classify(const BooleanFunction& f);

std::map<std::int64_t, std::size_t> spectrum_frequencies(const BooleanFunction& f);

// x -> Tr(x^{2^e + 1}) in the coordinates of `basis`. Requires odd m and
// gcd(e, m) = 1 (kBadParameters otherwise).
BooleanFunction gold_function(const TobBasis& basis, unsigned e);

// On F_2^{2k}: f(z) = sum_{i=1..k} z_i z_{2k+1-i} + <mask, z> + c.
// Coordinates pair up mirror-wise, so k = 2, mask = (1000) gives
// z1 z4 + z2 z3 + z1. Always bent; checked on construction.
BooleanFunction inner_product_bent(int k, GroupElement linear_mask, int affine_bit);

}  // namespace pestlab

#endif  // PESTLAB_BOOLFN_HPP
