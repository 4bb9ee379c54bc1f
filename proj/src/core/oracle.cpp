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

#include "pestlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pestlab/error.hpp"

namespace pestlab {
namespace {

double to_double(Rational q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

FidelityReport make_report(const Spectrum& spec, const EdgeStatePair& pair, double t, std::optional<Rational> t_pi,
                           double tolerance) {
  FidelityReport r;
  r.t = t;
  r.t_pi = t_pi;
  r.amplitude = transfer_amplitude(spec, pair, t);
  r.fidelity = std::norm(r.amplitude);
  r.tolerance = tolerance;
  return r;
}

}  // namespace

Complex transfer_amplitude(const Spectrum& spec, const EdgeStatePair& pair, double t) {
  const std::size_t n = spec.lambda.size();
  // chi(c+a) (1 - chi(d+c))/2 (1 - chi(b+a))/2 vanishes unless both
  // factors are 1; the four-term form below is the same sum.
  Complex sum{0.0, 0.0};
  for (std::size_t x = 0; x < n; ++x) {
    const GroupElement xe{static_cast<Mask>(x)};
    const int weight = character(xe, pair.c + pair.a) - character(xe, pair.c + pair.b) -
                       character(xe, pair.d + pair.a) + character(xe, pair.d + pair.b);
    if (weight == 0) continue;
    sum += static_cast<double>(weight) * std::polar(1.0, t * static_cast<double>(spec.lambda[x]));
  }
  return sum / (2.0 * static_cast<double>(n));
}

Complex transfer_amplitude(const ConnectionSet& s, double t, const EdgeStatePair& pair) {
  return transfer_amplitude(spectrum(s), pair, t);
}

Eigen::MatrixXcd dense_transfer_matrix(const ConnectionSet& s, double t) {
  const int m = s.dimension();
  if (m > kMaxDenseDimension) {
    fail(ErrorCode::kTooLarge, "dense transfer matrix is capped at m = " + std::to_string(kMaxDenseDimension));
  }
  const Spectrum spec = spectrum(s);
  const auto n = static_cast<Eigen::Index>(group_order(m));
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXd p(n);
  for (Eigen::Index x = 0; x < n; ++x) {
    // p_x = (chi_x(g))_g / sqrt(n); E_x = p_x p_x^*.
    for (Eigen::Index g = 0; g < n; ++g) {
      p(g) = character(GroupElement{static_cast<Mask>(x)}, GroupElement{static_cast<Mask>(g)});
    }
    p /= std::sqrt(static_cast<double>(n));
    const Complex phase = std::polar(1.0, t * static_cast<double>(spec.lambda[static_cast<std::size_t>(x)]));
    h.noalias() += phase * (p * p.transpose()).cast<Complex>();
  }
  return h;
}

FidelityReport fidelity_at(const ConnectionSet& s, const EdgeStatePair& pair, Rational t_pi, double tolerance) {
  return make_report(spectrum(s), pair, to_double(t_pi) * std::numbers::pi, t_pi, tolerance);
}

FidelityReport fidelity_at(const ConnectionSet& s, const EdgeStatePair& pair, double t, double tolerance) {
  return make_report(spectrum(s), pair, t, std::nullopt, tolerance);
}

SweepResult sweep_candidate_times(const ConnectionSet& s, const EdgeStatePair& pair, double tolerance,
                                  const SweepOptions& options) {
  if (!(tolerance > 0.0 && tolerance <= 1e-3)) {
    fail(ErrorCode::kInvalidArgument, "tolerance must lie in (0, 1e-3]");
  }
  const Spectrum spec = spectrum(s);
  SweepResult out;
  out.ell_max = max_time_exponent(s.size());
  out.premise_holds = bound_premise_holds(s, pair.a + pair.b);

  bool have_best = false;
  auto consider = [&](const FidelityReport& r) {
    if (!have_best || r.fidelity > out.best.fidelity) {
      out.best = r;
      have_best = true;
    }
  };

  for (int ell = 0; ell <= out.ell_max; ++ell) {
    const std::int64_t denom = std::int64_t{1} << ell;
    for (std::int64_t u = 0; u < denom; ++u) {
      const Rational t_pi(2 * u + 1, denom);
      FidelityReport r = make_report(spec, pair, to_double(t_pi) * std::numbers::pi, t_pi, tolerance);
      consider(r);
      if (r.is_hit()) out.hits.push_back(std::move(r));
    }
  }

  if (!out.premise_holds && options.grid_points > 0) {
    out.grid_scanned = true;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(options.grid_points);
    for (std::size_t i = 1; i <= options.grid_points; ++i) {
      FidelityReport r = make_report(spec, pair, step * static_cast<double>(i), std::nullopt, tolerance);
      if (r.is_hit()) out.grid_hits.push_back(std::move(r));
    }
  }

  auto by_time = [](const FidelityReport& x, const FidelityReport& y) { return x.t < y.t; };
  std::sort(out.hits.begin(), out.hits.end(), by_time);
  return out;
}

}  // namespace pestlab
