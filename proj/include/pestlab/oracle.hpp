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

#ifndef PESTLAB_ORACLE_HPP
#define PESTLAB_ORACLE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pestlab/cubelike.hpp"
#include "pestlab/pestcheck.hpp"

namespace pestlab {

// Floating-point falsifier for the exact verdicts of check_pest. Nothing here
// certifies PEST.

using Complex = std::complex<double>;

inline constexpr int kMaxDenseDimension = 10;
inline constexpr double kDefaultTolerance = 1e-9;

// 1/2 (e_c - e_d)^T H(t) (e_a - e_b), summed over characters in O(2^m).
Complex transfer_amplitude(const Spectrum& spec, const EdgeStatePair& pair, double t);
Complex transfer_amplitude(const ConnectionSet& s, double t, const EdgeStatePair& pair);

// H(t) = sum_x exp(i t lambda_x) E_x. kTooLarge for m > 10.
Eigen::MatrixXcd dense_transfer_matrix(const ConnectionSet& s, double t);

struct FidelityReport {
  double t = 0.0;
  std::optional<Rational> t_pi;  // exact coefficient of pi when known
  Complex amplitude;
  double fidelity = 0.0;  // |amplitude|^2
  double tolerance = kDefaultTolerance;

  bool is_hit() const { return fidelity >= 1.0 - tolerance; }
};

FidelityReport fidelity_at(const ConnectionSet& s, const EdgeStatePair& pair, Rational t_pi,
                           double tolerance = kDefaultTolerance);
FidelityReport fidelity_at(const ConnectionSet& s, const EdgeStatePair& pair, double t,
                           double tolerance = kDefaultTolerance);

struct SweepOptions {
  // Uniform grid over (0, 2 pi] scanned when the power-of-two premise fails
  // for the edge a + b; 0 disables it.
  std::size_t grid_points = std::size_t{1} << 14;
};

struct SweepResult {
  FidelityReport best;
  std::vector<FidelityReport> hits;       // candidate times, ascending t
  std::vector<FidelityReport> grid_hits;  // heuristic only, ascending t
  int ell_max = 0;
  bool premise_holds = false;
  bool grid_scanned = false;
};

// Evaluates t = (2u+1) pi / 2^ell for 0 <= ell <= ell_max(|S|), 0 <= u < 2^ell.
// kInvalidArgument unless 0 < tolerance <= 1e-3.
SweepResult sweep_candidate_times(const ConnectionSet& s, const EdgeStatePair& pair, double tolerance,
                                  const SweepOptions& options = {});

}  // namespace pestlab

#endif  // PESTLAB_ORACLE_HPP
