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

#include "pestlab/constructions.hpp"

#include <numeric>
#include <string>

#include "pestlab/error.hpp"

namespace pestlab {
namespace {

void verify(const LiftCertificate& cert) {
  if (!cert.pest.positive || cert.pest.t_min_pi != cert.t_pi) {
    fail(ErrorCode::kVerificationFailed,
         "lifted instance did not reach PEST at the predicted time pi * " +
             std::to_string(cert.t_pi.numerator()) + "/" + std::to_string(cert.t_pi.denominator()));
  }
}

}  // namespace

ConnectionSet lift(const BooleanFunction& f) {
  const int m = f.dimension();
  check_dimension(m + 1);
  const auto base = support(f);
  if (base.empty()) fail(ErrorCode::kEmptySupport, "cannot lift a function with empty support");

  std::vector<GroupElement> members;
  members.reserve(2 * base.size());
  const Mask top = Mask{1} << m;
  for (auto z : base) {
    members.push_back(z);
    members.push_back(GroupElement{z.bits | top});
  }
  ConnectionSet lifted(m + 1, std::move(members));

  // f(0) = 1 puts 0 into S' and is rejected by the constructor above.
  std::vector<std::int64_t> base_lambda(group_order(m), 0);
  for (auto z : base) base_lambda[z.bits] = 1;
  hadamard_transform(base_lambda);
  const Spectrum s = spectrum(lifted);
  for (Mask x = 0; x < group_order(m); ++x) {
    ensure(s.lambda[x] == 2 * base_lambda[x], "lifted spectrum is not doubled on the (0, x) half");
    ensure(s.lambda[x | top] == 0, "lifted spectrum does not vanish on the (1, x) half");
  }
  return lifted;
}

EdgeStatePair bent_lift_pair(int k) {
  const int m = 2 * k;
  const Mask top = Mask{1} << m;
  return {GroupElement{0}, GroupElement{top | dimension_mask(m)}, GroupElement{top},
          GroupElement{dimension_mask(m)}};
}

EdgeStatePair semibent_lift_pair(int m) {
  const Mask top = Mask{1} << m;
  return {GroupElement{0}, GroupElement{top | dimension_mask(m)}, GroupElement{dimension_mask(m)},
          GroupElement{top}};
}

LiftCertificate bent_lift_certificate(const BooleanFunction& f, const LiftOptions& options) {
  const int m = f.dimension();
  if (m % 2 != 0) fail(ErrorCode::kWrongParity, "bent lifts need even m, got " + std::to_string(m));
  const int k = m / 2;
  if (k < 2 && !options.allow_small_k) {
    fail(ErrorCode::kBadParameters, "bent lifts need k >= 2 (override with allow_small_k)");
  }
  if (classify(f).kind != FunctionClass::kBent) fail(ErrorCode::kNotBent, "function is not bent");
  if (f(all_ones(m)) != 1) {
    fail(ErrorCode::kAllOnesValueZero,
         "f(1,...,1) = 0; use the complement 1 + f or add a linear term that is odd on (1,...,1)");
  }

  if (f(GroupElement{0}) != 0) fail(ErrorCode::kZeroElement, "f(0,...,0) = 1 would put 0 in the lifted set");

  ConnectionSet lifted = lift(f);
  const EdgeStatePair pair = bent_lift_pair(k);
  PestCertificate pest = check_pest(lifted, pair);
  LiftCertificate cert{f, std::move(lifted), pair, Rational(1, std::int64_t{1} << k), LiftKind::kBentLift,
                       std::move(pest)};
  verify(cert);
  return cert;
}

LiftCertificate semibent_lift_certificate(const TobBasis& basis, unsigned e, const LiftOptions& options) {
  const int m = basis.dimension();
  if (m % 2 == 0) fail(ErrorCode::kBadParameters, "semi-bent lifts need odd m, got " + std::to_string(m));
  const int k = (m - 1) / 2;
  if (k < 1 && !options.allow_small_k) {
    fail(ErrorCode::kBadParameters, "semi-bent lifts need k >= 1 (override with allow_small_k)");
  }
  if (e == 0 || std::gcd(e, static_cast<unsigned>(m)) != 1) {
    fail(ErrorCode::kBadParameters, "need gcd(e, m) = 1, got e = " + std::to_string(e));
  }

  BooleanFunction f = gold_function(basis, e);
  ensure(f.weight() == group_order(m - 1), "Gold function support is not 2^{m-1}");
  ConnectionSet lifted = lift(f);
  const EdgeStatePair pair = semibent_lift_pair(m);
  PestCertificate pest = check_pest(lifted, pair);
  LiftCertificate cert{std::move(f), std::move(lifted), pair, Rational(1, std::int64_t{1} << (k + 1)),
                       LiftKind::kSemiBentLift, std::move(pest)};
  verify(cert);
  return cert;
}

}  // namespace pestlab
