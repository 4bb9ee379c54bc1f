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

#include "pestlab/group.hpp"

#include "pestlab/error.hpp"

namespace pestlab {

std::string to_binary(GroupElement x, int m) {
  std::string out(static_cast<std::size_t>(m), '0');
  for (int i = 0; i < m; ++i) {
    if ((x.bits >> (m - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

void check_dimension(int m) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "dimension must be positive, got " + std::to_string(m));
  if (m > kMaxDimension) {
    fail(ErrorCode::kTooLarge, "dimension " + std::to_string(m) + " exceeds the supported maximum " +
                                   std::to_string(kMaxDimension));
  }
}

}  // namespace pestlab
