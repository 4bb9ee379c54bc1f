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

#include "pestlab/cubelike.hpp"

#include <algorithm>
#include <string>

#include "pestlab/error.hpp"

namespace pestlab {

ConnectionSet::ConnectionSet(int m, std::vector<GroupElement> members) : m_(m), members_(std::move(members)) {
  check_dimension(m);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto z : members_) {
    if (!fits(z, m)) {
      fail(ErrorCode::kWidthMismatch, "element with mask " + std::to_string(z.bits) + " does not fit in m = " +
                                          std::to_string(m) + " bits");
    }
  }
  if (!members_.empty() && members_.front().bits == 0) {
    fail(ErrorCode::kZeroElement, "the identity 0 cannot belong to a connection set");
  }
}

bool ConnectionSet::contains(GroupElement z) const {
  return std::binary_search(members_.begin(), members_.end(), z);
}

ConnectionSet connection_set_of(const BooleanFunction& f) {
  return ConnectionSet(f.dimension(), support(f));
}

BooleanFunction indicator(const ConnectionSet& s) {
  return from_support(s.dimension(), s.members());
}

Spectrum spectrum(const ConnectionSet& s) {
  Spectrum out{s.dimension(), std::vector<std::int64_t>(group_order(s.dimension()), 0)};
  for (auto z : s.members()) out.lambda[z.bits] = 1;
  hadamard_transform(out.lambda);
  return out;
}

int rank(std::span<const GroupElement> vectors) {
  // Basis indexed by leading bit.
  Mask pivots[32] = {};
  int r = 0;
  for (auto v : vectors) {
    Mask x = v.bits;
    while (x != 0) {
      const int lead = 31 - std::countl_zero(x);
      if (pivots[lead] == 0) {
        pivots[lead] = x;
        ++r;
        break;
      }
      x ^= pivots[lead];
    }
  }
  return r;
}

bool is_connected(const ConnectionSet& s) { return rank(s.members()) == s.dimension(); }

Rational eigenprojection_entry(int m, GroupElement x, GroupElement g, GroupElement h) {
  check_dimension(m);
  return Rational(character(x, g + h), static_cast<std::int64_t>(group_order(m)));
}

}  // namespace pestlab
