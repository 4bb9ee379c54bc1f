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

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "pestlab/error.hpp"
#include "pestlab/oracle.hpp"

namespace pestlab {
namespace {

constexpr double kPi = std::numbers::pi;

ConnectionSet set_of(int m, std::initializer_list<Mask> masks) {
  std::vector<GroupElement> v;
  for (auto x : masks) v.push_back({x});
  return ConnectionSet(m, std::move(v));
}

EdgeStatePair pair_of(Mask a, Mask b, Mask c, Mask d) { return {{a}, {b}, {c}, {d}}; }

ConnectionSet bent_lifted() {
  std::vector<GroupElement> v;
  for (Mask z : {0b1000u, 0b0111u, 0b0110u, 0b1010u, 0b1100u, 0b1111u}) {
    v.push_back({z});
    v.push_back({z | 0b10000u});
  }
  return ConnectionSet(5, v);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(TransferAmplitude, IdentityAtTimeZero) {
  const auto amp = transfer_amplitude(bent_lifted(), 0.0, pair_of(0b00000, 0b11111, 0b10000, 0b01111));
  EXPECT_NEAR(std::abs(amp), 0.0, 1e-12);
}

TEST(TransferAmplitude, HalfPiSetAtHalfPi) {
  const auto s = set_of(3, {0b001, 0b110, 0b010});
  const auto amp = transfer_amplitude(s, kPi / 2, pair_of(0b000, 0b001, 0b101, 0b100));
  EXPECT_GE(std::norm(amp), 1 - 1e-9);
}

TEST(TransferAmplitude, MatchesEigendecompositionOracle) {
  const auto s = set_of(2, {0b01, 0b10, 0b11});
  const auto pr = pair_of(0b00, 0b01, 0b10, 0b11);
  const auto want = testing::dense_amplitude(testing::dense_exp_oracle(2, testing::masks(s), 0.37), pr);
  EXPECT_NEAR(std::abs(transfer_amplitude(s, 0.37, pr) - want), 0.0, 1e-10);

  testing::Rng rng(41);
  std::uniform_real_distribution<double> time(0.0, 4 * kPi);
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + i % 6;
    if (m < 2) continue;
    const auto r = testing::random_connection_set(rng, m, false);
    const auto p = testing::random_pair(rng, m);
    const double t = time(rng);
    const auto u = testing::dense_exp_oracle(m, testing::masks(r), t);
    EXPECT_NEAR(std::abs(transfer_amplitude(r, t, p) - testing::dense_amplitude(u, p)), 0.0, 1e-10);
    // Same for the library's projection-sum matrix.
    const auto h = dense_transfer_matrix(r, t);
    EXPECT_LT(max_abs(h - u), 1e-9);
    EXPECT_NEAR(std::abs(transfer_amplitude(r, t, p) - testing::dense_amplitude(h, p)), 0.0, 1e-10);
  }
}

TEST(TransferAmplitude, Symmetry) {
  testing::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + i % 5;
    const auto s = testing::random_connection_set(rng, m, false);
    const auto p = testing::random_pair(rng, m);
    const double t = 0.1 * i;
    const auto fwd = transfer_amplitude(s, t, p);
    const auto back = transfer_amplitude(s, t, EdgeStatePair{p.c, p.d, p.a, p.b});
    EXPECT_NEAR(std::abs(fwd), std::abs(back), 1e-10);
  }
}

TEST(TransferAmplitude, Periodicity) {
  testing::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + i % 6;
    const auto s = testing::random_connection_set(rng, m, false);
    const auto p = testing::random_pair(rng, m);
    const double t = 0.05 * i;
    EXPECT_NEAR(fidelity_at(s, p, t).fidelity, fidelity_at(s, p, t + 2 * kPi).fidelity, 1e-9);
  }
}

TEST(DenseTransferMatrix, SmallCases) {
  const auto s = set_of(3, {0b001, 0b110, 0b010});
  EXPECT_LT(max_abs(dense_transfer_matrix(s, 0.0) - Eigen::MatrixXcd::Identity(8, 8)), 1e-12);

  const auto k2 = set_of(1, {1});
  for (double t : {0.0, 0.3, 1.7, 5.0}) {
    const auto h = dense_transfer_matrix(k2, t);
    const Complex c(std::cos(t), 0), is(0, std::sin(t));
    EXPECT_NEAR(std::abs(h(0, 0) - c), 0, 1e-12);
    EXPECT_NEAR(std::abs(h(1, 1) - c), 0, 1e-12);
    EXPECT_NEAR(std::abs(h(0, 1) - is), 0, 1e-12);
    EXPECT_NEAR(std::abs(h(1, 0) - is), 0, 1e-12);
  }

  const auto h = dense_transfer_matrix(s, kPi / 2);
  const auto pr = pair_of(0b000, 0b001, 0b101, 0b100);
  EXPECT_NEAR(std::abs(testing::dense_amplitude(h, pr) - transfer_amplitude(s, kPi / 2, pr)), 0, 1e-12);
  EXPECT_GE(std::norm(testing::dense_amplitude(h, pr)), 1 - 1e-9);
}

TEST(DenseTransferMatrix, UnitaryAndPeriodic) {
  testing::Rng rng(44);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int i = 0; i < 60; ++i) {
    const int m = 1 + i % 6;
    const auto s = testing::random_connection_set(rng, m, false);
    const double t = time(rng);
    const auto h = dense_transfer_matrix(s, t);
    const auto n = h.rows();
    EXPECT_LT(max_abs(h * h.adjoint() - Eigen::MatrixXcd::Identity(n, n)), 1e-9);
    EXPECT_LT(max_abs(dense_transfer_matrix(s, 2 * kPi) - Eigen::MatrixXcd::Identity(n, n)), 1e-9);
    EXPECT_LT(max_abs(h - dense_transfer_matrix(s, t + 2 * kPi)), 1e-9);
    EXPECT_LT(max_abs(h - h.transpose()), 1e-12);
  }
}

TEST(DenseTransferMatrix, TooLarge) {
  std::vector<GroupElement> v{{1}};
  const ConnectionSet s(11, v);
  try {
    dense_transfer_matrix(s, 1.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(FidelityAt, ExactTimeIsRecorded) {
  const auto s = set_of(3, {0b001, 0b110, 0b010});
  const auto r = fidelity_at(s, pair_of(0b000, 0b001, 0b101, 0b100), Rational(1, 2));
  ASSERT_TRUE(r.t_pi.has_value());
  EXPECT_EQ(*r.t_pi, Rational(1, 2));
  EXPECT_NEAR(r.t, kPi / 2, 1e-15);
  EXPECT_TRUE(r.is_hit());
  EXPECT_NEAR(r.fidelity, std::norm(r.amplitude), 1e-15);
  EXPECT_LE(r.fidelity, 1 + 1e-9);
}

TEST(Sweep, HalfPiSet) {
  const auto s = set_of(3, {0b001, 0b110, 0b010});
  const auto r = sweep_candidate_times(s, pair_of(0b000, 0b001, 0b101, 0b100), 1e-9);
  ASSERT_FALSE(r.hits.empty());
  EXPECT_EQ(*r.hits.front().t_pi, Rational(1, 2));
  EXPECT_GE(r.hits.front().fidelity, 1 - 1e-9);
  for (std::size_t i = 1; i < r.hits.size(); ++i) EXPECT_LT(r.hits[i - 1].t, r.hits[i].t);
}

TEST(Sweep, NoTransferSetHasNoHit) {
  const auto s = set_of(3, {0b001, 0b110, 0b010, 0b101});
  const auto r = sweep_candidate_times(s, pair_of(0b000, 0b001, 0b111, 0b110), 1e-6);
  EXPECT_TRUE(r.hits.empty());
  EXPECT_LT(r.best.fidelity, 1 - 1e-6);
}

TEST(Sweep, GoldLiftHitsAtQuarterPi) {
  const auto s = set_of(4, {0b0111, 0b0101, 0b0011, 0b0110, 0b1111, 0b1101, 0b1011, 0b1110});
  const auto r = sweep_candidate_times(s, pair_of(0b0000, 0b1111, 0b1000, 0b0111), 1e-9);
  ASSERT_FALSE(r.hits.empty());
  EXPECT_EQ(*r.hits.front().t_pi, Rational(1, 4));
}

TEST(Sweep, GridRunsOnlyWhenPremiseFails) {
  // S = {111, 001, 110}: with unit a + b = 111 every z has z + 111 in S.
  const auto s = set_of(3, {0b111, 0b001, 0b110});
  const auto pr = pair_of(0b000, 0b111, 0b001, 0b110);
  const auto r = sweep_candidate_times(s, pr, 1e-9);
  EXPECT_FALSE(r.premise_holds);
  EXPECT_TRUE(r.grid_scanned);
  const auto off = sweep_candidate_times(s, pr, 1e-9, SweepOptions{0});
  EXPECT_FALSE(off.grid_scanned);

  const auto s2 = set_of(3, {0b001, 0b110, 0b010});
  const auto r2 = sweep_candidate_times(s2, pair_of(0b000, 0b001, 0b101, 0b100), 1e-9);
  EXPECT_TRUE(r2.premise_holds);
  EXPECT_FALSE(r2.grid_scanned);
}

TEST(Sweep, ToleranceRange) {
  const auto s = set_of(3, {0b001, 0b110, 0b010});
  const auto pr = pair_of(0b000, 0b001, 0b101, 0b100);
  EXPECT_THROW(sweep_candidate_times(s, pr, 0.0), Error);
  EXPECT_THROW(sweep_candidate_times(s, pr, 0.01), Error);
  EXPECT_NO_THROW(sweep_candidate_times(s, pr, 1e-3));
}

}  // namespace
}  // namespace pestlab
