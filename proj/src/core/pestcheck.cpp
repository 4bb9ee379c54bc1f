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

#include "pestlab/pestcheck.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include "pestlab/error.hpp"

namespace pestlab {

Valuation v2(std::int64_t n) {
  if (n == 0) return Valuation::infinite();
  return Valuation::finite(std::countr_zero(static_cast<std::uint64_t>(n)));
}

bool EdgeStatePair::is_nontrivial() const {
  if (a == b || c == d) return false;
  if (a == c && b == d) return false;
  if (a == d && b == c) return false;
  return true;
}

std::string_view reason_name(NegativeReason reason) {
  switch (reason) {
    case NegativeReason::kSumNotZero: return "SumNotZero";
    case NegativeReason::kTrivialPair: return "TrivialPair";
    case NegativeReason::kValuationNotConstantOnOmegaMinus: return "ValuationNotConstantOnOmegaMinus";
    case NegativeReason::kOmegaMinusValuationInfinite: return "OmegaMinusValuationInfinite";
    case NegativeReason::kOmegaPlusValuationTooSmall: return "OmegaPlusValuationTooSmall";
  }
  return "Unknown";
}

OmegaPartition omega_sets(int m, const EdgeStatePair& pair) {
  check_dimension(m);
  OmegaPartition p{pair.a + pair.b, pair.a + pair.c, {}, {}};
  if (p.e.bits == 0 || p.g.bits == 0 || p.g == p.e) {
    fail(ErrorCode::kDegeneratePair, "edge pair collapses the partition (b = a, c = a or c = b)");
  }
  for (Mask x = 0; x < group_order(m); ++x) {
    const GroupElement xe{x};
    if (!dot(p.e, xe)) continue;
    (dot(p.g, xe) ? p.minus : p.plus).push_back(xe);
  }
  return p;
}

TimeExistence exists_pest_time(std::span<const std::int64_t> plus, std::span<const std::int64_t> minus) {
  if (minus.empty()) fail(ErrorCode::kInvalidArgument, "the minus class must be nonempty");

  auto negative = [](NegativeReason r) { return TimeExistence{std::nullopt, r}; };
  if (std::find(minus.begin(), minus.end(), 0) != minus.end()) {
    return negative(NegativeReason::kOmegaMinusValuationInfinite);
  }
  const Valuation rho = v2(minus.front());
  for (auto delta : minus) {
    if (v2(delta) != rho) return negative(NegativeReason::kValuationNotConstantOnOmegaMinus);
  }
  const Valuation needed = Valuation::finite(rho.value() + 1);
  for (auto delta : plus) {
    if (!(v2(delta) >= needed)) return negative(NegativeReason::kOmegaPlusValuationTooSmall);
  }

  std::int64_t modulus = 0;
  for (auto delta : minus) modulus = std::gcd(modulus, std::abs(delta));
  for (auto delta : plus) modulus = std::gcd(modulus, std::abs(delta));
  return TimeExistence{PestTime{rho.value(), modulus}, std::nullopt};
}

PestCertificate check_pest(const ConnectionSet& s, const EdgeStatePair& pair, std::optional<GroupElement> x0) {
  return check_pest(s, spectrum(s), pair, x0);
}

PestCertificate check_pest(const ConnectionSet& s, const Spectrum& spec, const EdgeStatePair& pair,
                           std::optional<GroupElement> x0) {
  const int m = s.dimension();
  ensure(spec.m == m, "spectrum dimension does not match the connection set");
  for (auto v : {pair.a, pair.b, pair.c, pair.d}) {
    if (!fits(v, m)) fail(ErrorCode::kWidthMismatch, "pair element does not fit in m bits");
  }

  PestCertificate cert;
  cert.m = m;
  cert.pair = pair;
  cert.connected = is_connected(s);
  cert.ab_is_edge = s.contains(pair.a + pair.b);
  cert.cd_is_edge = s.contains(pair.c + pair.d);

  if (!pair.is_nontrivial()) {
    cert.reason = NegativeReason::kTrivialPair;
    return cert;
  }
  if (!pair.sums_to_zero()) {
    cert.reason = NegativeReason::kSumNotZero;
    return cert;
  }
  try {
    cert.partition = omega_sets(m, pair);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegeneratePair) throw;
    cert.reason = NegativeReason::kTrivialPair;
    return cert;
  }

  const auto& plus_set = cert.partition.plus;
  if (x0) {
    if (!std::binary_search(plus_set.begin(), plus_set.end(), *x0)) {
      fail(ErrorCode::kInvalidArgument, "x0 must lie in the plus class");
    }
    cert.x0 = *x0;
  } else {
    cert.x0 = plus_set.front();
  }

  const std::int64_t ref = spec[cert.x0];
  std::vector<std::int64_t> plus, minus;
  for (auto y : plus_set) {
    if (y != cert.x0) plus.push_back(ref - spec[y]);
  }
  for (auto x : cert.partition.minus) minus.push_back(ref - spec[x]);

  const TimeExistence found = exists_pest_time(plus, minus);
  if (!found.time) {
    cert.reason = found.failure;
    return cert;
  }

  // M as the gcd over the whole hyperplane (a+b).x = 1, computed apart from
  // the class split above.
  std::int64_t hyperplane_gcd = 0;
  for (Mask x = 0; x < group_order(m); ++x) {
    const GroupElement xe{x};
    if (dot(cert.partition.e, xe) && xe != cert.x0) hyperplane_gcd = std::gcd(hyperplane_gcd, std::abs(ref - spec[xe]));
  }
  ensure(hyperplane_gcd == found.time->modulus, "hyperplane gcd disagrees with the class gcd");
  ensure(found.time->modulus == (std::int64_t{1} << found.time->rho), "PEST modulus is not 2^rho");

  cert.positive = true;
  cert.rho = found.time->rho;
  cert.ell = found.time->rho;
  cert.modulus = found.time->modulus;
  cert.t_min_pi = Rational(1, cert.modulus);
  return cert;
}

bool transfers_at(const ConnectionSet& s, const EdgeStatePair& pair, Rational t_pi) {
  if (!pair.is_nontrivial()) return false;
  const int m = s.dimension();
  const Spectrum spec = spectrum(s);

  // sign[x]: +1 if E_x(e_a - e_b) = E_x(e_c - e_d) != 0, -1 if it is the
  // negative, 0 if both vanish.
  std::vector<int> sign(group_order(m), 0);
  for (Mask x = 0; x < group_order(m); ++x) {
    const GroupElement xe{x};
    const int p = character(xe, pair.a) - character(xe, pair.b);
    const int q = character(xe, pair.c) - character(xe, pair.d);
    if (p == 0 && q == 0) continue;
    if (p == q) sign[x] = 1;
    else if (p == -q) sign[x] = -1;
    else return false;  // not strongly cospectral
  }

  std::optional<Mask> ref;
  for (Mask x = 0; x < group_order(m); ++x) {
    if (sign[x] == 0) continue;
    if (!ref) {
      ref = x;
      continue;
    }
    // t (lambda_ref - lambda_x) must be an even multiple of pi for equal
    // signs and an odd one otherwise.
    const Rational phase = t_pi * Rational(spec.lambda[*ref] - spec.lambda[x]);
    if (phase.denominator() != 1) return false;
    const bool odd = (phase.numerator() % 2) != 0;
    if (odd != (sign[x] != sign[*ref])) return false;
  }
  return ref.has_value();
}

std::vector<PestPartner> find_pest_partners(const ConnectionSet& s, GroupElement a, GroupElement b) {
  const int m = s.dimension();
  if (a == b) fail(ErrorCode::kInvalidArgument, "the initial edge needs a != b");
  if (!fits(a, m) || !fits(b, m)) fail(ErrorCode::kWidthMismatch, "edge element does not fit in m bits");
  const Spectrum spec = spectrum(s);
  std::vector<PestPartner> out;
  for (Mask c = 0; c < group_order(m); ++c) {
    const GroupElement ce{c};
    if (ce == a || ce == b) continue;
    const GroupElement de = a + b + ce;
    PestCertificate cert = check_pest(s, spec, EdgeStatePair{a, b, ce, de});
    if (cert.positive) out.push_back(PestPartner{ce, de, std::move(cert)});
  }
  return out;
}

GroupElement EdgeNormalization::scale_element(GroupElement z) const {
  return basis.coords(mul(basis.field(), scale, basis.expand(z)));
}

GroupElement EdgeNormalization::apply(GroupElement z) const { return scale_element(z + shift); }

EdgeStatePair EdgeNormalization::apply(const EdgeStatePair& pair) const {
  return {apply(pair.a), apply(pair.b), apply(pair.c), apply(pair.d)};
}

EdgeNormalization normalize_edge(const TobBasis& basis, const ConnectionSet& s, GroupElement a, GroupElement b) {
  if (basis.dimension() != s.dimension()) {
    fail(ErrorCode::kDegreeMismatch, "basis and connection set have different dimensions");
  }
  if (a == b) fail(ErrorCode::kInvalidArgument, "normalization needs a != b");
  const FieldElement scale = inv(basis.field(), basis.expand(a + b));
  std::vector<GroupElement> members;
  members.reserve(s.size());
  for (auto z : s.members()) members.push_back(basis.coords(mul(basis.field(), scale, basis.expand(z))));
  return EdgeNormalization{basis, ConnectionSet(s.dimension(), std::move(members)), a, scale};
}

int max_time_exponent(std::size_t s) {
  const std::uint64_t v = 2 * static_cast<std::uint64_t>(s) * (static_cast<std::uint64_t>(s) + 3);
  if (v == 0) return 0;
  // floor(log2(v) / 2) = floor(floor(log2 v) / 2)
  return (static_cast<int>(std::bit_width(v)) - 1) / 2;
}

bool bound_premise_holds(const ConnectionSet& s, GroupElement unit) {
  return std::any_of(s.members().begin(), s.members().end(),
                     [&](GroupElement z) { return z != unit && !s.contains(z + unit); });
}

TimeBound time_bound(const ConnectionSet& s) {
  return TimeBound{max_time_exponent(s.size()), bound_premise_holds(s, all_ones(s.dimension()))};
}

BoundCheck validate_time_bound(const TobBasis& basis, const ConnectionSet& s, const PestCertificate& cert) {
  if (!cert.positive) fail(ErrorCode::kInvalidArgument, "bound validation needs a positive certificate");
  const EdgeNormalization norm = normalize_edge(basis, s, cert.pair.a, cert.pair.b);
  BoundCheck out;
  out.normalized = check_pest(norm.normalized, norm.apply(cert.pair));
  ensure(out.normalized.pair.a.bits == 0 && out.normalized.pair.b == all_ones(s.dimension()),
         "normalization did not reach the edge (0, 1)");
  ensure(out.normalized.positive && out.normalized.t_min_pi == cert.t_min_pi,
         "normalization changed the PEST verdict");
  out.bound = time_bound(norm.normalized);
  out.modulus_is_power_of_two = out.normalized.modulus == (std::int64_t{1} << out.normalized.rho);
  out.within_bound = !out.bound.premise_holds || out.normalized.rho <= out.bound.ell_max;
  return out;
}

}  // namespace pestlab
