// Copyright 2026 The irsloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "irsloc/beamforming.hpp"
#include "irsloc/errors.hpp"
#include "irsloc/random.hpp"
#include "oracles.hpp"

namespace irsloc {
namespace {

TEST(PowerSplit, Validation) {
  EXPECT_NO_THROW((PowerSplit{1.0, {0.5, 0.5}}.validate()));
  EXPECT_THROW((PowerSplit{0.0, {0.5}}.validate()), ArgumentError);
  EXPECT_THROW((PowerSplit{1.0, {0.0, 0.5}}.validate()), ArgumentError);
  EXPECT_THROW((PowerSplit{1.0, {0.7, 0.5}}.validate()), ArgumentError);
}

TEST(TransmitBeams, PowerAndDirection) {
  const PowerSplit split{2.0, {0.25, 0.75}};
  const std::vector<double> aods = {-0.3, 0.5};
  const auto beams = transmit_beams(split, aods, 6);
  ASSERT_EQ(beams.size(), 2u);
  for (int k = 0; k < 2; ++k) {
    EXPECT_NEAR(beams[k].squaredNorm(), split.eta[k] * split.rho_d, 1e-14);
    // Matched to its own direction: a^T w = sqrt(eta rho N).
    const std::complex<double> gain = steering_vector(6, aods[k]).transpose() * beams[k];
    EXPECT_NEAR(gain.real(), std::sqrt(split.eta[k] * split.rho_d * 6), 1e-12);
    EXPECT_NEAR(gain.imag(), 0.0, 1e-12);
  }
  EXPECT_THROW(transmit_beams(split, std::vector<double>{0.1}, 6), ArgumentError);
}

TEST(PhaseShiftBeam, UnitModulusConjugatePhase) {
  const CVector xi = phase_shift_beam(0.36, 0.59, 16);
  for (int s = 0; s < 16; ++s) {
    EXPECT_NEAR(std::abs(xi[s]), 1.0, 1e-15);
    const std::complex<double> expected = std::polar(1.0, -std::numbers::pi * s * (0.36 + 0.59));
    EXPECT_NEAR(std::abs(xi[s] - expected), 0.0, 1e-13);
  }
  // Perfect alignment makes the reflected cascade coherent.
  const CVector cascade = steering_vector(16, 0.36).cwiseProduct(xi).cwiseProduct(steering_vector(16, 0.59));
  EXPECT_NEAR(std::abs(cascade.sum()), 16.0, 1e-12);
}

TEST(EffectiveChannel, MatchesExplicitDiagonalComposition) {
  RandomStream rng(8, 8);
  const int K = 3;
  const int M = 7;
  const int N = 4;
  std::vector<BsIrsChannel> bs_irs(K);
  std::vector<Eigen::MatrixXcd> g_naive(K);
  LinkGrid<IrsUserChannel> irs_user(K, K);
  std::vector<std::vector<Eigen::VectorXcd>> u_naive(K, std::vector<Eigen::VectorXcd>(K));
  std::vector<CVector> phases(K);
  for (int m = 0; m < K; ++m) {
    bs_irs[m] = sample_bs_irs(M, N, 0.1 * m, -0.2 * m, {1.0, RicianFactor(1.0)}, rng);
    g_naive[m] = bs_irs[m].entries;
    phases[m] = phase_shift_beam(0.05 * m, 0.3, M);
    for (int k = 0; k < K; ++k) {
      irs_user(m, k) = sample_irs_user(M, 0.2 * k, {1.0, RicianFactor(0.5)}, rng);
      u_naive[m][k] = irs_user(m, k).entries;
    }
  }
  const auto fast = effective_channel(bs_irs, irs_user, phases);
  const auto slow = oracle::compose_naive(g_naive, u_naive, phases);
  for (int k = 0; k < K; ++k) EXPECT_LT((fast[k] - slow[k]).norm(), 1e-12 * slow[k].norm());

  std::vector<CVector> short_phases(phases.begin(), phases.end() - 1);
  EXPECT_THROW(effective_channel(bs_irs, irs_user, short_phases), ArgumentError);
  phases[1] = CVector::Ones(M + 1);
  EXPECT_THROW(effective_channel(bs_irs, irs_user, phases), ArgumentError);
}

}  // namespace
}  // namespace irsloc
