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

#ifndef PESTLAB_CONSTRUCTIONS_HPP
#define PESTLAB_CONSTRUCTIONS_HPP

#include "pestlab/boolfn.hpp"
#include "pestlab/cubelike.hpp"
#include "pestlab/gf2m.hpp"
#include "pestlab/pestcheck.hpp"

namespace pestlab {

enum class LiftKind { kBentLift, kSemiBentLift };

struct LiftCertificate {
  BooleanFunction base;
  ConnectionSet lifted;
  EdgeStatePair pair;
  Rational t_pi;
  LiftKind kind;
  PestCertificate pest;  // recomputed by check_pest, never assumed
};

struct LiftOptions {
  // Accept k below the guaranteed range; check_pest still decides.
  bool allow_small_k = false;
};

// S' = {(0, z)} u {(1, z)} over z in supp(f), the new coordinate leading.
// Verifies lambda_(1,x) = 0 and lambda_(0,x) = 2 lambda_x(supp f).
// kEmptySupport when f = 0.
ConnectionSet lift(const BooleanFunction& f);

// a = (0 0..0), b = (1 1..1), c = (1 0..0), d = (0 1..1), t = pi / 2^k.
EdgeStatePair bent_lift_pair(int k);
// a = (0 0..0), b = (1 1..1), c = (0 1..1), d = (1 0..0), t = pi / 2^{k+1}.
EdgeStatePair semibent_lift_pair(int m);

// f bent on F_2^{2k}, k >= 2, f(1..1) = 1. Errors: kWrongParity, kNotBent,
// kAllOnesValueZero, kBadParameters (k too small), kVerificationFailed.
LiftCertificate bent_lift_certificate(const BooleanFunction& f, const LiftOptions& options = {});

// Lift of Tr(x^{2^e+1}) on F_{2^m}, m = 2k + 1, k >= 1, gcd(e, m) = 1.
LiftCertificate semibent_lift_certificate(const TobBasis& basis, unsigned e, const LiftOptions& options = {});

}  // namespace pestlab

#endif  // PESTLAB_CONSTRUCTIONS_HPP
