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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "irsloc/errors.hpp"
#include "irsloc/power_control.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

namespace irsloc {
namespace {

void expect_satisfied(const LpProblem& lp, const PowerAllocation& alloc) {
  ASSERT_TRUE(alloc.feasible());
  double total = 0.0;
  for (std::size_t k = 0; k < alloc.p.size(); ++k) {
    EXPECT_GE(alloc.p[k], 0.0);
    total += alloc.p[k];
    double lhs = lp.rhs[k];
    double scale = std::max(1.0, lp.rhs.norm());
    for (std::size_t i = 0; i < alloc.p.size(); ++i) {
      lhs += lp.d_bar(k, i) * alloc.p[i];
      scale = std::max(scale, std::abs(lp.d_bar(k, i) * alloc.p[i]));
    }
    EXPECT_LE(lhs, 1e-9 * scale) << "constraint " << k;
  }
  EXPECT_DOUBLE_EQ(total, alloc.total);
}

TEST(PerUnitCoeffs, ConsistentWithBreakdown) {
  ScenarioConfig c = ScenarioConfig::reference_deployment();
  c.eta = {0.1, 0.2, 0.3, 0.4};
  const UnitCoefficients u = per_unit_coeffs(c);
  const SystemModel m = build_model(c);
  const RateBreakdown b = closed_form_breakdown(m);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(u.a_bar[k] * m.eta[k] * m.rho_d / b.a[k], 1.0, 1e-12);
    EXPECT_EQ(u.b_bar[k], u.c_bar(k, k) - u.a_bar[k]);
  }
}

TEST(PerUnitCoeffs, SingleUserPerfectLocation) {
  ScenarioConfig c = testing::orthogonal_scenario(1);
  c.upsilon = 0.0;
  const SystemModel m = build_model(c);
  const double beta = beta_cascaded(m.b2i[0], m.i2u_fading(0, 0)).beta;
  EXPECT_NEAR(per_unit_coeffs(c).a_bar[0] / (5.0 * 16 * 16 * beta), 1.0, 1e-12);
}

TEST(BuildLp, RowsFollowTargets) {
  const UnitCoefficients u = per_unit_coeffs(ScenarioConfig::reference_deployment());
  const double noise = 2.266065741229501e-15;
  const std::vector<double> zero(4, 0.0);
  const LpProblem lp0 = build_lp(u, zero, noise);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(lp0.rhs[k], 0.0);
    for (int i = 0; i < 4; ++i) EXPECT_EQ(lp0.d_bar(k, i), i == k ? -u.a_bar[k] : 0.0);
  }
  const std::vector<double> one(4, 1.0);
  const std::vector<double> two(4, 2.0);
  const LpProblem lp1 = build_lp(u, one, noise);
  const LpProblem lp2 = build_lp(u, two, noise);
  EXPECT_NEAR(lp1.rhs[0], noise, 1e-30);
  EXPECT_NEAR(lp2.rhs[0], 3.0 * noise, 1e-29);
  EXPECT_NEAR(lp2.d_bar(0, 1) / lp1.d_bar(0, 1), 3.0, 1e-12);
  EXPECT_NEAR(lp1.d_bar(2, 2), u.b_bar[2] - u.a_bar[2], 1e-25);
  EXPECT_THROW(build_lp(u, std::vector<double>{1.0}, noise), ArgumentError);
  EXPECT_THROW(build_lp(u, std::vector<double>{1, 1, -1, 1}, noise), ArgumentError);
}

TEST(SolveMinPower, ZeroTargetsNeedNoPower) {
  const UnitCoefficients u = per_unit_coeffs(ScenarioConfig::reference_deployment());
  const PowerAllocation a = solve_min_power(build_lp(u, std::vector<double>(4, 0.0), 1e-15));
  ASSERT_TRUE(a.feasible());
  EXPECT_EQ(a.total, 0.0);
  for (double p : a.p) EXPECT_EQ(p, 0.0);
}

TEST(SolveMinPower, SingleUserAnalyticInversion) {
  ScenarioConfig c = testing::orthogonal_scenario(1);
  c.upsilon = 0.0;
  c.v_b2i = c.v_i2u = RicianFactor::infinite();
  const SystemModel m = build_model(c);
  const double beta = beta_cascaded(m.b2i[0], m.i2u_fading(0, 0)).beta;
  for (double r : {0.5, 3.0, 9.0}) {
    const PowerAllocation a = solve_min_power(build_lp(unit_coefficients(m), std::vector<double>{r}, m.noise));
    ASSERT_TRUE(a.feasible());
    const double expected = (std::exp2(r) - 1.0) * m.noise / (16.0 * 16.0 * 5.0 * beta);
    EXPECT_NEAR(a.total / expected, 1.0, 1e-12);
  }
}

TEST(SolveMinPower, ReferenceScenarioConstraintsHold) {
  const SystemModel m = build_model(ScenarioConfig::reference_deployment());
  const UnitCoefficients u = unit_coefficients(m);
  double last = 0.0;
  for (double r : {0.5, 1.0, 1.5, 2.0}) {
    const LpProblem lp = build_lp(u, std::vector<double>(4, r), m.noise);
    const PowerAllocation a = solve_min_power(lp);
    expect_satisfied(lp, a);
    EXPECT_GE(a.total, last);
    last = a.total;
    // Achieved rates meet the targets when the LP powers are used.
    for (int k = 0; k < 4; ++k) {
      double interference = m.noise + a.p[k] * u.b_bar[k];
      for (int i = 0; i < 4; ++i) {
        if (i != k) interference += a.p[i] * u.c_bar(k, i);
      }
      EXPECT_GE(std::log2(1.0 + a.p[k] * u.a_bar[k] / interference), r - 1e-9);
    }
  }
}

TEST(SolveMinPower, MatchesGridSearchOnTwoUsers) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> target(0.0, 5.0);
  int feasible = 0;
  for (int t = 0; t < 30; ++t) {
    const ScenarioConfig c = testing::random_two_user(rng);
    const SystemModel m = build_model(c);
    const std::vector<double> targets = {target(rng), target(rng)};
    const LpProblem lp = build_lp(unit_coefficients(m), targets, m.noise);
    const PowerAllocation a = solve_min_power(lp);
    const oracle::GridResult g = oracle::grid_min_power_k2(lp.d_bar, lp.rhs.head<2>());
    ASSERT_EQ(a.feasible(), g.feasible) << "scenario " << t;
    if (a.feasible()) {
      ++feasible;
      expect_satisfied(lp, a);
      EXPECT_NEAR(a.total / g.total, 1.0, 5e-3) << "scenario " << t;
      EXPECT_LE(a.total, g.total * (1 + 1e-9));
    }
  }
  EXPECT_GT(feasible, 0);
}

TEST(SolveMinPower, TotalCapCanMakeTargetsInfeasible) {
  const SystemModel m = build_model(ScenarioConfig::reference_deployment());
  const UnitCoefficients u = unit_coefficients(m);
  const std::vector<double> targets(4, 1.0);
  const PowerAllocation free = solve_min_power(build_lp(u, targets, m.noise));
  ASSERT_TRUE(free.feasible());
  EXPECT_TRUE(solve_min_power(build_lp(u, targets, m.noise, 1.01 * free.total)).feasible());
  EXPECT_FALSE(solve_min_power(build_lp(u, targets, m.noise, 0.99 * free.total)).feasible());
}

TEST(SolveMinPower, FeasibilityIsMonotoneInTargets) {
  const SystemModel m = build_model(ScenarioConfig::reference_deployment());
  const UnitCoefficients u = unit_coefficients(m);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> r(0.0, 6.0);
  std::uniform_real_distribution<double> shrink(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> high(4);
    std::vector<double> low(4);
    for (int k = 0; k < 4; ++k) {
      high[k] = r(rng);
      low[k] = high[k] * shrink(rng);
    }
    if (solve_min_power(build_lp(u, high, m.noise)).feasible()) {
      EXPECT_TRUE(solve_min_power(build_lp(u, low, m.noise)).feasible());
    }
  }
}

TEST(CommonRate, ThresholdShrinksWithUncertainty) {
  ScenarioConfig c = ScenarioConfig::reference_deployment();
  c.upsilon = 0.5;
  const CommonRate tight = max_feasible_common_rate(c, 1e-4);
  c.upsilon = 2.0;
  const CommonRate loose = max_feasible_common_rate(c, 1e-4);
  EXPECT_FALSE(tight.hit_ceiling);
  EXPECT_GT(tight.rate, loose.rate);
  EXPECT_GE(loose.rate, 0.0);
}

TEST(CommonRate, InterferenceFreeSingleUserHitsCeiling) {
  ScenarioConfig c = testing::orthogonal_scenario(1);
  c.upsilon = 0.0;
  c.v_b2i = c.v_i2u = RicianFactor::infinite();
  const CommonRate r = max_feasible_common_rate(c, 1e-3);
  EXPECT_TRUE(r.hit_ceiling);
  EXPECT_EQ(r.rate, 30.0);
  EXPECT_THROW(max_feasible_common_rate(c, 0.0), ArgumentError);
}

}  // namespace
}  // namespace irsloc
