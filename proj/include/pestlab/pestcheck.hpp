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

#ifndef PESTLAB_PESTCHECK_HPP
#define PESTLAB_PESTCHECK_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pestlab/cubelike.hpp"
#include "pestlab/gf2m.hpp"
#include "pestlab/group.hpp"

namespace pestlab {

// 2-adic valuation of an integer; v2(0) is infinite.
class Valuation {
 public:
  static constexpr Valuation infinite() { return Valuation(); }
  static constexpr Valuation finite(int v) { return Valuation(v); }

  constexpr bool is_infinite() const { return value_ < 0; }
  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Valuation, Valuation) = default;
  // Infinity compares above every finite value.
  friend constexpr bool operator<(Valuation x, Valuation y) {
    if (x.is_infinite()) return false;
    return y.is_infinite() || x.value_ < y.value_;
  }
  friend constexpr bool operator>=(Valuation x, Valuation y) { return !(x < y); }

 private:
  constexpr Valuation() = default;
  constexpr explicit Valuation(int v) : value_(v) {}
  int value_ = -1;
};

Valuation v2(std::int64_t n);

// Transfer from the edge state e_a - e_b to e_c - e_d.
struct EdgeStatePair {
  GroupElement a, b, c, d;

  // a != b, c != d and {c, d} != {a, b} as ordered edges.
  bool is_nontrivial() const;
  bool sums_to_zero() const { return (a + b + c + d).bits == 0; }
  EdgeStatePair translated(GroupElement alpha) const { return {a + alpha, b + alpha, c + alpha, d + alpha}; }

  friend bool operator==(const EdgeStatePair&, const EdgeStatePair&) = default;
};

// plus  = {x : (a+c).x = 0, (a+b).x = 1}
// minus = {x : (a+c).x = 1, (a+b).x = 1}
struct OmegaPartition {
  GroupElement e;  // a + b
  GroupElement g;  // a + c
  std::vector<GroupElement> plus;
  std::vector<GroupElement> minus;
};

// kDegeneratePair when a + b = 0 or a + c in {0, a + b}.
OmegaPartition omega_sets(int m, const EdgeStatePair& pair);

enum class NegativeReason {
  kSumNotZero,
  kTrivialPair,
  kValuationNotConstantOnOmegaMinus,
  kOmegaMinusValuationInfinite,
  kOmegaPlusValuationTooSmall,
};

std::string_view reason_name(NegativeReason reason);

struct PestTime {
  int rho = 0;
  std::int64_t modulus = 0;  // M; the admissible times are (2u+1) pi / M
};

struct TimeExistence {
  std::optional<PestTime> time;
  std::optional<NegativeReason> failure;  // set iff time is empty
};

// Valuation criterion on the differences lambda_{x0} - lambda_x, split by
// the sign chi_x(a+c) the phase must reach. kInvalidArgument when
// `minus` is empty.
TimeExistence exists_pest_time(std::span<const std::int64_t> plus, std::span<const std::int64_t> minus);

struct PestCertificate {
  int m = 0;
  EdgeStatePair pair;
  bool positive = false;
  std::optional<NegativeReason> reason;
  int rho = 0;               // positive only
  std::int64_t modulus = 0;  // M = 2^ell, positive only
  int ell = 0;
  Rational t_min_pi{0};      // t_min / pi, positive only
  GroupElement x0;
  OmegaPartition partition;  // empty sets for kSumNotZero / kTrivialPair
  bool connected = false;
  bool ab_is_edge = false;
  bool cd_is_edge = false;
};

// Decides PEST between e_a - e_b and e_c - e_d exactly. `x0` overrides
// the reference point (default: smallest element of plus); it must lie in
// plus. Also cross-checks M against the gcd over the whole hyperplane.
PestCertificate check_pest(const ConnectionSet& s, const EdgeStatePair& pair,
                           std::optional<GroupElement> x0 = std::nullopt);
PestCertificate check_pest(const ConnectionSet& s, const Spectrum& spec, const EdgeStatePair& pair,
                           std::optional<GroupElement> x0 = std::nullopt);

// Independent exact test at a given time t = q pi through strong
// cospectrality and the phase conditions on the two eigenvalue classes.
bool transfers_at(const ConnectionSet& s, const EdgeStatePair& pair, Rational t_pi);

struct PestPartner {
  GroupElement c;
  GroupElement d;
  PestCertificate certificate;
};

// All (c, d) with PEST from (a, b); d = a + b + c is forced. Sorted by c.
std::vector<PestPartner> find_pest_partners(const ConnectionSet& s, GroupElement a, GroupElement b);

// Carries (a, b) to (0, 1): translate by a, then scale by (a+b)^{-1} in the
// field, where 1 has coordinates (1, ..., 1) under the trace-orthogonal basis.
struct EdgeNormalization {
  TobBasis basis;
  ConnectionSet normalized;
  GroupElement shift;
  FieldElement scale;

  // z -> (a+b)^{-1} z, the automorphism carrying S onto `normalized`.
  GroupElement scale_element(GroupElement z) const;
  // z -> (a+b)^{-1} (z + a), for vertices.
  GroupElement apply(GroupElement z) const;
  EdgeStatePair apply(const EdgeStatePair& pair) const;
};

EdgeNormalization normalize_edge(const TobBasis& basis, const ConnectionSet& s, GroupElement a, GroupElement b);

// ell_max = floor(log2(2 s (s + 3)) / 2).
int max_time_exponent(std::size_t s);

// Whether some z0 in S, z0 != unit, has z0 + unit outside S.
bool bound_premise_holds(const ConnectionSet& s, GroupElement unit);

struct TimeBound {
  int ell_max = 0;
  bool premise_holds = false;
};

// Evaluated in normalized coordinates, where the all-ones vector is 1.
TimeBound time_bound(const ConnectionSet& s);

struct BoundCheck {
  TimeBound bound;
  PestCertificate normalized;
  bool modulus_is_power_of_two = false;
  bool within_bound = false;  // rho <= ell_max, vacuous when the premise fails
};

// Normalizes a positive certificate's instance and checks M = 2^rho and the
// exponent bound there. kInvalidArgument for negative certificates.
BoundCheck validate_time_bound(const TobBasis& basis, const ConnectionSet& s, const PestCertificate& cert);

}  // namespace pestlab

#endif  // PESTLAB_PESTCHECK_HPP
