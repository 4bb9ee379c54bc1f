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

#ifndef PESTLAB_GROUP_HPP
#define PESTLAB_GROUP_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace pestlab {

using Mask = std::uint32_t;

// Largest supported dimension m of F_2^m (and extension degree of F_{2^m}).
inline constexpr int kMaxDimension = 24;

// An element of the elementary abelian group F_2^m stored as a bit mask.
//
// Coordinate x_1 is the most significant of the m bits, so the tuple (110)
// is the mask 0b110. The dot product does not depend on this choice but
// every text form and every table index does.
struct GroupElement {
  Mask bits = 0;

  friend constexpr GroupElement operator+(GroupElement x, GroupElement y) {
    return GroupElement{x.bits ^ y.bits};
  }
  friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

constexpr GroupElement element(Mask bits) { return GroupElement{bits}; }

// Standard inner product over F_2.
constexpr int dot(GroupElement x, GroupElement y) {
  return std::popcount(x.bits & y.bits) & 1;
}

// chi_x(g) = (-1)^{x.g}
constexpr int character(GroupElement x, GroupElement g) {
  return dot(x, g) ? -1 : 1;
}

constexpr Mask dimension_mask(int m) {
  return m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1;
}

constexpr GroupElement all_ones(int m) { return GroupElement{dimension_mask(m)}; }

constexpr std::size_t group_order(int m) { return std::size_t{1} << m; }

constexpr bool fits(GroupElement x, int m) { return (x.bits & ~dimension_mask(m)) == 0; }

// x_1 ... x_m as a string of '0'/'1'.
std::string to_binary(GroupElement x, int m);

// Throws kTooLarge / kInvalidArgument when m is outside [1, kMaxDimension].
void check_dimension(int m);

}  // namespace pestlab

#endif  // PESTLAB_GROUP_HPP
