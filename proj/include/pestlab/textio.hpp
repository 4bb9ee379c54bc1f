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

#ifndef PESTLAB_TEXTIO_HPP
#define PESTLAB_TEXTIO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pestlab/boolfn.hpp"
#include "pestlab/cubelike.hpp"
#include "pestlab/pestcheck.hpp"

namespace pestlab {

// Shared text formats.
//
// Support file: one element per line, either an m-character binary string
// (x_1 first) or a 0x-prefixed hex mask. '#' starts a comment. Without an
// explicit m, m is the length of the longest binary line; hex-only files
// need m. Errors name the 1-based line: kZeroElement, kWidthMismatch,
// kParse. Duplicates are dropped with a warning.
//
// Truth-table file: one line of 2^m characters in {0, 1}, entry x = f(x).

struct ParsedSupport {
  ConnectionSet set;
  std::vector<std::string> warnings;
};

ParsedSupport parse_support_text(std::string_view text, std::optional<int> m = std::nullopt);
BooleanFunction parse_truth_table(std::string_view text, std::optional<int> m = std::nullopt);

// Binary string of exactly m characters or 0x hex.
GroupElement parse_element(std::string_view token, int m);
// "a,b,c,d"
EdgeStatePair parse_pair(std::string_view text, int m);
// "a,b"
std::pair<GroupElement, GroupElement> parse_edge(std::string_view text, int m);
// Hex with or without 0x.
Mask parse_hex_mask(std::string_view token);
// "p/q", "p/qpi", "p/q*pi", "pi/q", "pi", with optional unicode pi.
Rational parse_pi_coefficient(std::string_view text);

std::string format_rational(Rational q);  // "p/q"; integers as "p/1"

}  // namespace pestlab

#endif  // PESTLAB_TEXTIO_HPP
