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
#include <random>

#include <gtest/gtest.h>

#include "irsloc/errors.hpp"
#include "irsloc/geometry.hpp"
#include "irsloc/random.hpp"
#include "oracles.hpp"

namespace irsloc {
namespace {

constexpr double kPi = std::numbers::pi;

oracle::Vec3 vec(const Position3& p) { return {p.x, p.y, p.z}; }

Position3 random_position(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng), u(rng)};
}

TEST(BsIrsAngles, ReferenceIrs) {
  const BsIrsAngles a = bs_irs_angles({}, {240, 178, -20});
  // d = 299.4728702236648
  EXPECT_NEAR(a.aod, -0.5943777139714146, 1e-15);
  EXPECT_NEAR(a.aoa, 0.5943777139714146, 1e-15);
}

TEST(BsIrsAngles, Errors) {
  EXPECT_THROW(bs_irs_angles({1, 0, 0}, {240, 178, -20}), ArgumentError);
  EXPECT_THROW(bs_irs_angles({}, {}), GeometryError);
}

TEST(LinkGeometry, ReferenceLink) {
  const LinkGeometry g = link_geometry({240, 178, -20}, {224, 168, -40});
  EXPECT_NEAR(g.d_hat, 27.49545416973504, 1e-12);
  EXPECT_NEAR(g.cos_x, 0.5819143739626463, 1e-15);
  EXPECT_NEAR(g.cos_y, 0.363696483726654, 1e-15);
  EXPECT_NEAR(g.cos_z, 0.727392967453308, 1e-15);
  EXPECT_NEAR(g.phi, std::sqrt(1.0 - g.cos_y * g.cos_y), 1e-15);
  EXPECT_THROW(link_geometry({1, 2, 3}, {1, 2, 3}), GeometryError);
}

TEST(LinkGeometry, SpreadBoundedAndEqualToGradientNorm) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const LinkGeometry g = link_geometry(random_position(rng, -50, 50), random_position(rng, -50, 50));
    EXPECT_GE(g.phi, 0.0);
    EXPECT_LE(g.phi, 1.0 + 1e-15);
    const auto grad = g.error_gradient();
    const double n = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
    EXPECT_NEAR(n * g.d_hat, g.phi, 1e-12);
  }
}

TEST(LinkGeometry, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Position3 irs = random_position(rng, -100, 100);
    const Position3 user = random_position(rng, -100, 100);
    const auto grad = link_geometry(irs, user).error_gradient();
    const auto ref = oracle::cos_y_gradient(vec(irs), vec(user));
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(grad[c], ref[c], 1e-8);
  }
}

TEST(AngleError, LinearizationIsSecondOrderAccurate) {
  const Position3 irs{240, 178, -20};
  const Position3 user{224, 168, -40};
  const LinkGeometry g = link_geometry(irs, user);
  for (double scale : {1e-1, 1e-2, 1e-3}) {
    const LocationError e{0.3 * scale, -0.5 * scale, 0.8 * scale};
    const double exact = irs_user_aod(irs, user + Position3{e.dx, e.dy, e.dz}) - g.cos_y;
    EXPECT_LT(std::abs(exact - angle_error(g, e)), 5.0 * scale * scale / (g.d_hat * g.d_hat));
  }
}

TEST(ErrorPdf, IntegratesToOneWithClosedFormVariance) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const LinkGeometry g = link_geometry(random_position(rng, -60, 60), random_position(rng, -60, 60));
    const double radius = 0.1 + 3.0 * std::uniform_real_distribution<double>()(rng);
    const double w = error_support(g, radius);
    const auto pdf = [&](double x) { return error_pdf(g, radius, x); };
    EXPECT_NEAR(oracle::integrate(pdf, -w, w), 1.0, 1e-10);
    const double var = oracle::integrate([&](double x) { return x * x * pdf(x); }, -w, w);
    EXPECT_NEAR(var / error_variance(g, radius), 1.0, 1e-10);
    EXPECT_NEAR(error_variance(g, radius), radius * radius * g.phi * g.phi / (5 * g.d_hat * g.d_hat),
                1e-15);
    EXPECT_EQ(pdf(1.01 * w), 0.0);
    EXPECT_EQ(pdf(-1.01 * w), 0.0);
    EXPECT_DOUBLE_EQ(pdf(0.3 * w), pdf(-0.3 * w));
  }
}

TEST(ErrorPdf, Errors) {
  const LinkGeometry g = link_geometry({240, 178, -20}, {224, 168, -40});
  EXPECT_THROW(error_pdf(g, 0.0, 0.0), ArgumentError);
  EXPECT_THROW(error_pdf(g, -1.0, 0.0), ArgumentError);
  // User straight along the y axis: the AOD has a stationary point.
  const LinkGeometry flat = link_geometry({0, 10, 0}, {0, 0, 0});
  EXPECT_EQ(flat.phi, 0.0);
  EXPECT_THROW(error_pdf(flat, 1.0, 0.0), DegenerateDistributionError);
}

TEST(LocationErrorSampler, StaysInBallWithUniformMoments) {
  RandomStream rng(3, 4);
  const double radius = 2.0;
  const int n = 200000;
  double sum_sq = 0.0;
  double mean_x = 0.0;
  for (int i = 0; i < n; ++i) {
    const LocationError e = sample_location_error(radius, rng);
    ASSERT_LE(e.norm(), radius);
    sum_sq += e.norm() * e.norm();
    mean_x += e.dx;
  }
  EXPECT_NEAR(sum_sq / n, 0.6 * radius * radius, 0.01);
  EXPECT_NEAR(mean_x / n, 0.0, 0.01);
}

TEST(LocationErrorSampler, EdgeCases) {
  RandomStream rng(1, 1);
  const LocationError zero = sample_location_error(0.0, rng);
  EXPECT_EQ(zero.norm(), 0.0);
  EXPECT_THROW(sample_location_error(-1.0, rng), ArgumentError);
  EXPECT_THROW(sample_location_error(std::nan(""), rng), ArgumentError);
}

TEST(ZetaKernel, ReferenceValues) {
  EXPECT_EQ(zeta_kernel(0.0), 1.0);
  EXPECT_NEAR(zeta_kernel(kPi), 3.0 / (kPi * kPi), 1e-15);
  EXPECT_NEAR(zeta_kernel(kPi / 2), 24.0 / (kPi * kPi * kPi), 1e-15);
}

TEST(ZetaKernel, ContinuousAcrossSeriesSwitchAndBounded) {
  const double lo = std::nextafter(1e-3, 0.0);
  const double hi = std::nextafter(1e-3, 1.0);
  // The direct formula loses about 1e-10 to cancellation just above the switch.
  EXPECT_NEAR(zeta_kernel(lo), zeta_kernel(hi), 5e-10);
  for (double w = 0.0; w < 200.0; w += 0.013) {
    EXPECT_LE(std::abs(zeta_kernel(w)), 1.0 + 1e-15);
  }
}

TEST(Zeta, StructuralIdentities) {
  const LinkGeometry gm = link_geometry({240, 178, -20}, {224, 168, -40});
  const LinkGeometry gn = link_geometry({333, 68, -20}, {224, 168, -40});
  EXPECT_EQ(zeta_single(gm, 1.5, 1), 1.0);
  EXPECT_EQ(zeta_pair(gm, 1.5, 6, 6), 1.0);
  EXPECT_EQ(zeta_pair(gm, 1.5, 3, 9), zeta_pair(gm, 1.5, 9, 3));
  EXPECT_DOUBLE_EQ(zeta_pair(gm, 1.5, 3, 9), zeta_single(gm, 1.5, 7));
  EXPECT_NEAR(zeta_cross(gm, gn, 1.5, 5, 1), zeta_single(gm, 1.5, 5), 1e-14);
  EXPECT_NEAR(zeta_cross(gm, gm, 1.5, 5, 3), zeta_pair(gm, 1.5, 5, 3), 1e-14);
  EXPECT_EQ(zeta_single(gm, 0.0, 16), 1.0);
  EXPECT_THROW(zeta_single(gm, 1.0, 0), ArgumentError);
  EXPECT_THROW(zeta_pair(gm, 1.0, 1, 0), ArgumentError);
  EXPECT_THROW(zeta_cross(gm, gn, 1.0, 0, 1), ArgumentError);
}

TEST(Zeta, MatchesSphereOracle) {
  const Position3 user{224, 168, -40};
  const Position3 irs_m{240, 178, -20};
  const Position3 irs_n{333, 68, -20};
  const LinkGeometry gm = link_geometry(irs_m, user);
  const LinkGeometry gn = link_geometry(irs_n, user);
  const double radius = 2.0;
  const long draws = 400000;
  const auto single = oracle::zeta_sphere(vec(irs_m), vec(irs_m), vec(user), radius, 12, 1, draws, 1);
  EXPECT_NEAR(zeta_single(gm, radius, 12), single.mean.real(), std::max(1e-3, 4 * single.std_error));
  const auto pair = oracle::zeta_sphere(vec(irs_m), vec(irs_m), vec(user), radius, 14, 4, draws, 2);
  EXPECT_NEAR(zeta_pair(gm, radius, 14, 4), pair.mean.real(), std::max(1e-3, 4 * pair.std_error));
  const auto cross = oracle::zeta_sphere(vec(irs_m), vec(irs_n), vec(user), radius, 9, 13, draws, 3);
  EXPECT_NEAR(zeta_cross(gm, gn, radius, 9, 13), cross.mean.real(), std::max(1e-3, 4 * cross.std_error));
}

}  // namespace
}  // namespace irsloc
