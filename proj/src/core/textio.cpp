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

#include "pestlab/textio.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>

#include "pestlab/error.hpp"

namespace pestlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_hex_token(std::string_view t) { return t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X'); }

bool is_binary_token(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c == '0' || c == '1'; });
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorCode::kParse, "cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

struct Token {
  std::size_t line;
  std::string_view text;
};

}  // namespace

Mask parse_hex_mask(std::string_view token) {
  std::string_view digits = token;
  if (is_hex_token(digits)) digits.remove_prefix(2);
  std::uint64_t v = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, v, 16);
  if (digits.empty() || ec != std::errc() || ptr != end || v > 0xFFFFFFFFULL) {
    fail(ErrorCode::kParse, "cannot parse hex mask '" + std::string(token) + "'");
  }
  return static_cast<Mask>(v);
}

GroupElement parse_element(std::string_view token, int m) {
  token = trim(token);
  if (is_hex_token(token)) {
    const GroupElement x{parse_hex_mask(token)};
    if (!fits(x, m)) {
      fail(ErrorCode::kWidthMismatch, "'" + std::string(token) + "' does not fit in m = " + std::to_string(m) + " bits");
    }
    return x;
  }
  if (!is_binary_token(token)) fail(ErrorCode::kParse, "'" + std::string(token) + "' is neither binary nor 0x hex");
  if (token.size() != static_cast<std::size_t>(m)) {
    fail(ErrorCode::kWidthMismatch, "'" + std::string(token) + "' has " + std::to_string(token.size()) +
                                        " digits, expected m = " + std::to_string(m));
  }
  Mask bits = 0;
  for (char c : token) bits = (bits << 1) | static_cast<Mask>(c == '1');
  return GroupElement{bits};
}

EdgeStatePair parse_pair(std::string_view text, int m) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) fail(ErrorCode::kParse, "a pair is written a,b,c,d");
  return {parse_element(parts[0], m), parse_element(parts[1], m), parse_element(parts[2], m),
          parse_element(parts[3], m)};
}

std::pair<GroupElement, GroupElement> parse_edge(std::string_view text, int m) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) fail(ErrorCode::kParse, "an edge is written a,b");
  return {parse_element(parts[0], m), parse_element(parts[1], m)};
}

ParsedSupport parse_support_text(std::string_view text, std::optional<int> m) {
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  int longest_binary = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    const auto t = strip_comment(line);
    if (t.empty()) continue;
    if (!is_hex_token(t) && !is_binary_token(t)) {
      fail(ErrorCode::kParse, at_line(line_no) + "'" + std::string(t) + "' is neither binary nor 0x hex");
    }
    if (!is_hex_token(t)) longest_binary = std::max(longest_binary, static_cast<int>(t.size()));
    tokens.push_back({line_no, t});
  }

  int dim = 0;
  if (m) {
    dim = *m;
  } else if (longest_binary > 0) {
    dim = longest_binary;
  } else if (tokens.empty()) {
    fail(ErrorCode::kEmptySupport, "support is empty and no dimension was given");
  } else {
    fail(ErrorCode::kParse, "hex-only support files need an explicit m");
  }
  check_dimension(dim);

  ParsedSupport out{ConnectionSet(dim, {}), {}};
  std::vector<GroupElement> members;
  std::set<Mask> seen;
  for (const auto& tok : tokens) {
    GroupElement x;
    try {
      x = parse_element(tok.text, dim);
    } catch (const Error& e) {
      fail(e.code(), at_line(tok.line) + e.what());
    }
    if (x.bits == 0) fail(ErrorCode::kZeroElement, at_line(tok.line) + "0 cannot belong to a connection set");
    if (!seen.insert(x.bits).second) {
      out.warnings.push_back(at_line(tok.line) + "duplicate element " + to_binary(x, dim) + " ignored");
      continue;
    }
    members.push_back(x);
  }
  out.set = ConnectionSet(dim, std::move(members));
  return out;
}

BooleanFunction parse_truth_table(std::string_view text, std::optional<int> m) {
  std::string bits;
  for (auto line : split(text, '\n')) {
    for (char c : strip_comment(line)) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c != '0' && c != '1') fail(ErrorCode::kParse, std::string("truth table contains '") + c + "'");
      bits.push_back(c);
    }
  }
  if (bits.empty() || !std::has_single_bit(bits.size()) || bits.size() < 2) {
    fail(ErrorCode::kWidthMismatch, "truth table length " + std::to_string(bits.size()) + " is not 2^m with m >= 1");
  }
  const int dim = std::countr_zero(bits.size());
  if (m && *m != dim) {
    fail(ErrorCode::kWidthMismatch, "truth table has 2^" + std::to_string(dim) + " entries but m = " +
                                        std::to_string(*m));
  }
  std::vector<std::uint8_t> table(bits.size());
  std::transform(bits.begin(), bits.end(), table.begin(), [](char c) { return std::uint8_t(c == '1'); });
  return BooleanFunction(dim, std::move(table));
}

Rational parse_pi_coefficient(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s.push_back(c);
  }
  bool had_pi = false;
  for (std::string_view sym : {"π", "pi", "PI", "Pi"}) {
    const auto pos = s.find(sym);
    if (pos != std::string::npos) {
      s.erase(pos, sym.size());
      had_pi = true;
      break;
    }
  }
  if (s.empty() && had_pi) return Rational(1);
  const auto slash = s.find('/');
  std::string_view num = std::string_view(s).substr(0, slash);
  if (num.empty() && had_pi) num = "1";
  const std::int64_t p = parse_int(num, "time numerator");
  std::int64_t q = 1;
  if (slash != std::string::npos) q = parse_int(std::string_view(s).substr(slash + 1), "time denominator");
  if (q <= 0) fail(ErrorCode::kParse, "time denominator must be positive");
  return Rational(p, q);
}

std::string format_rational(Rational q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace pestlab
