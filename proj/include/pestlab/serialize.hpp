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

#ifndef PESTLAB_SERIALIZE_HPP
#define PESTLAB_SERIALIZE_HPP

#include "json.hpp"

#include "pestlab/boolfn.hpp"
#include "pestlab/constructions.hpp"
#include "pestlab/cubelike.hpp"
#include "pestlab/gf2m.hpp"
#include "pestlab/oracle.hpp"
#include "pestlab/pestcheck.hpp"

namespace pestlab {

// JSON documents, schema "pest-lab/1". Elements are MSB-first binary
// strings, times are exact "p/q" coefficients of pi, eigenvalues and
// valuations are integers, fidelities are floats.

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pest-lab/1";

Json spectrum_json(const ConnectionSet& s, const Spectrum& spec);
Json walsh_json(const WalshSpectrum& w, const Classification& c);
Json basis_json(const TobBasis& basis);
Json certificate_json(const PestCertificate& cert);
Json partners_json(const ConnectionSet& s, GroupElement a, GroupElement b, const std::vector<PestPartner>& partners);
Json fidelity_json(const ConnectionSet& s, const EdgeStatePair& pair, const FidelityReport& report);
Json sweep_json(const ConnectionSet& s, const EdgeStatePair& pair, const SweepResult& sweep);
Json lift_json(const LiftCertificate& cert);

std::string_view class_name(FunctionClass kind);

}  // namespace pestlab

#endif  // PESTLAB_SERIALIZE_HPP
