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

#include "pestlab/boolfn.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "pestlab/error.hpp"

namespace pestlab {

BooleanFunction::BooleanFunction(int m, std::vector<std::uint8_t> table) : m_(m), table_(std::move(table)) {
  check_dimension(m);
  if (table_.size() != group_order(m)) {
    fail(ErrorCode::kWidthMismatch, "truth table has " + std::to_string(table_.size()) + " entries, expected " +
                                        std::to_string(group_order(m)));
  }
  for (auto v : table_) {
    if (v > 1) fail(ErrorCode::kInvalidArgument, "truth table values must be 0 or 1");
  }
}

BooleanFunction BooleanFunction::zero(int m) {
  check_dimension(m);
  return BooleanFunction(m, std::vector<std::uint8_t>(group_order(m), 0));
}

std::size_t BooleanFunction::weight() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
}

BooleanFunction BooleanFunction::complement() const {
  std::vector<std::uint8_t> t(table_.size());
  std::transform(table_.begin(), table_.end(), t.begin(), [](std::uint8_t v) { return std::uint8_t(v ^ 1U); });
  return BooleanFunction(m_, std::move(t));
}

void hadamard_transform(std::span<std::int64_t> data) {
  const std::size_t n = data.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t u = data[i];
        const std::int64_t v = data[i + half];
        data[i] = u + v;
        data[i + half] = u - v;
      }
    }
  }
}

WalshSpectrum wht(const BooleanFunction& f) {
  WalshSpectrum s{f.dimension(), {}};
  s.values.reserve(f.table().size());
  for (auto v : f.table()) s.values.push_back(v ? -1 : 1);
  hadamard_transform(s.values);
  return s;
}

std::vector<GroupElement> support(const BooleanFunction& f) {
  std::vector<GroupElement> out;
  const auto t = f.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x]) out.push_back(GroupElement{static_cast<Mask>(x)});
  }
  return out;
}

BooleanFunction from_support(int m, std::span<const GroupElement> elements) {
  check_dimension(m);
  std::vector<std::uint8_t> table(group_order(m), 0);
  for (auto z : elements) {
    if (!fits(z, m)) fail(ErrorCode::kWidthMismatch, "element " + std::to_string(z.bits) + " is wider than m");
    table[z.bits] = 1;
  }
  return BooleanFunction(m, std::move(table));
}

namespace {

// Nonzero |values| collapse to one amplitude, or 0 when they do not.
std::int64_t common_amplitude(const WalshSpectrum& s) {
  std::int64_t amp = 0;
  for (auto v : s.values) {
    const std::int64_t a = std::abs(v);
    if (a == 0) continue;
    if (amp == 0) amp = a;
    else if (amp != a) return 0;
  }
  return amp;
}

std::int64_t semi_bent_amplitude(int m) {
  return std::int64_t{1} << (m % 2 == 1 ? (m + 1) / 2 : m / 2 + 1);
}

}  // namespace

Classification classify(const BooleanFunction& f) {
  const int m = f.dimension();
  const WalshSpectrum s = wht(f);
  const std::int64_t amp = common_amplitude(s);
  const bool has_zero = std::find(s.values.begin(), s.values.end(), 0) != s.values.end();

  if (amp == 0) return {FunctionClass::kOther, 0, std::nullopt};

  if (m % 2 == 0 && !has_zero && amp == (std::int64_t{1} << (m / 2))) {
    std::vector<std::uint8_t> dual(s.values.size());
    for (std::size_t x = 0; x < dual.size(); ++x) dual[x] = s.values[x] < 0 ? 1 : 0;
    BooleanFunction g(m, std::move(dual));
    const WalshSpectrum gs = wht(g);
    ensure(common_amplitude(gs) == amp &&
               std::find(gs.values.begin(), gs.values.end(), 0) == gs.values.end(),
           "dual of a bent function is not bent");
    return {FunctionClass::kBent, amp, std::move(g)};
  }
  if (amp == semi_bent_amplitude(m)) return {FunctionClass::kSemiBent, amp, std::nullopt};
  return {FunctionClass::kPlateaued, amp, std::nullopt};
}

std::map<std::int64_t, std::size_t> spectrum_frequencies(const BooleanFunction& f) {
  std::map<std::int64_t, std::size_t> hist;
  for (auto v : wht(f).values) ++hist[v];
  return hist;
}

BooleanFunction gold_function(const TobBasis& basis, unsigned e) {
  const FieldSpec& field = basis.field();
  const int m = field.degree();
  if (m % 2 == 0) fail(ErrorCode::kBadParameters, "Gold functions need odd m, got " + std::to_string(m));
  if (e == 0 || std::gcd(e, static_cast<unsigned>(m)) != 1) {
    fail(ErrorCode::kBadParameters, "Gold exponent needs gcd(e, m) = 1, got e = " + std::to_string(e));
  }
  const std::uint64_t exponent = (std::uint64_t{1} << (e % static_cast<unsigned>(m))) + 1;
  std::vector<std::uint8_t> table(field.order());
  for (std::size_t v = 0; v < table.size(); ++v) {
    const FieldElement x = basis.expand(GroupElement{static_cast<Mask>(v)});
    table[v] = static_cast<std::uint8_t>(trace(field, pow(field, x, exponent)));
  }
  return BooleanFunction(m, std::move(table));
}

BooleanFunction inner_product_bent(int k, GroupElement linear_mask, int affine_bit) {
  if (k < 1) fail(ErrorCode::kBadParameters, "inner-product bent functions need k >= 1");
  const int m = 2 * k;
  check_dimension(m);
  if (!fits(linear_mask, m)) fail(ErrorCode::kWidthMismatch, "linear mask is wider than 2k");
  std::vector<std::uint8_t> table(group_order(m));
  for (std::size_t v = 0; v < table.size(); ++v) {
    const auto z = static_cast<Mask>(v);
    int value = dot(linear_mask, GroupElement{z}) ^ (affine_bit & 1);
    for (int i = 1; i <= k; ++i) {
      // z_i sits at bit m - i, its partner z_{m+1-i} at bit i - 1.
      value ^= static_cast<int>(((z >> (m - i)) & (z >> (i - 1))) & 1U);
    }
    table[v] = static_cast<std::uint8_t>(value);
  }
  BooleanFunction f(m, std::move(table));
  ensure(classify(f).kind == FunctionClass::kBent, "inner-product construction is not bent");
  return f;
}

}  // namespace pestlab
