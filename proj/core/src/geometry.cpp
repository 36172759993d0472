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

#include "irsloc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irsloc/errors.hpp"
#include "irsloc/random.hpp"

namespace irsloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this argument the closed form of the kernel loses about half its
// digits to cancellation; the Taylor series is exact to double precision.
constexpr double kKernelTaylorThreshold = 1e-3;

void require_index(int s, const char* name) {
  if (s < 1) {
    throw ArgumentError(std::string("element index ") + name + " must be >= 1");
  }
}

}  // namespace

Position3 operator+(const Position3& a, const Position3& b) noexcept {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Position3 operator-(const Position3& a, const Position3& b) noexcept {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

Position3 operator*(double s, const Position3& p) noexcept {
  return {s * p.x, s * p.y, s * p.z};
}

double norm(const Position3& p) noexcept { return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z); }

bool is_finite(const Position3& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

std::array<double, 3> LinkGeometry::error_gradient() const noexcept {
  return {cos_y * cos_x / d_hat, (cos_y * cos_y - 1.0) / d_hat, cos_y * cos_z / d_hat};
}

double LocationError::norm() const noexcept { return std::sqrt(dx * dx + dy * dy + dz * dz); }

BsIrsAngles bs_irs_angles(const Position3& bs, const Position3& irs) {
  if (bs != Position3{}) {
    throw ArgumentError("the BS must be located at the coordinate origin");
  }
  const double d = norm(irs - bs);
  if (!(d > 0.0)) {
    throw GeometryError("BS and IRS coincide");
  }
  const double c = (irs.y - bs.y) / d;
  return {-c, c};
}

LinkGeometry link_geometry(const Position3& irs, const Position3& est_user) {
  const Position3 diff = irs - est_user;
  const double d = norm(diff);
  if (!(d > 0.0)) {
    throw GeometryError("IRS and estimated user position coincide");
  }
  LinkGeometry g;
  g.d_hat = d;
  g.cos_x = diff.x / d;
  g.cos_y = diff.y / d;
  g.cos_z = diff.z / d;
  const double cy2 = g.cos_y * g.cos_y;
  g.phi = std::sqrt((cy2 - 1.0) * (cy2 - 1.0) + cy2 * g.cos_z * g.cos_z +
                    cy2 * g.cos_x * g.cos_x);
  return g;
}

double irs_user_aod(const Position3& irs, const Position3& user) {
  const double d = norm(irs - user);
  if (!(d > 0.0)) {
    throw GeometryError("IRS and user position coincide");
  }
  return (irs.y - user.y) / d;
}

LocationError sample_location_error(double radius, RandomStream& rng) {
  if (!std::isfinite(radius)) {
    throw ArgumentError("location uncertainty radius must be finite");
  }
  if (radius < 0.0) {
    throw ArgumentError("location uncertainty radius must be non-negative");
  }
  if (radius == 0.0) {
    return {};
  }
  const double r2 = radius * radius;
  for (;;) {
    const double x = rng.uniform(-radius, radius);
    const double y = rng.uniform(-radius, radius);
    const double z = rng.uniform(-radius, radius);
    if (x * x + y * y + z * z <= r2) {
      return {x, y, z};
    }
  }
}

double angle_error(const LinkGeometry& geom, const LocationError& err) noexcept {
  const auto grad = geom.error_gradient();
  return grad[0] * err.dx + grad[1] * err.dy + grad[2] * err.dz;
}

double error_support(const LinkGeometry& geom, double radius) noexcept {
  return radius * geom.phi / geom.d_hat;
}

double error_pdf(const LinkGeometry& geom, double radius, double x) {
  if (!(radius > 0.0)) {
    throw ArgumentError("error_pdf requires a positive uncertainty radius");
  }
  if (geom.phi == 0.0) {
    throw DegenerateDistributionError(
        "user lies on the IRS array axis; the AOD error is identically zero");
  }
  if (std::abs(x) > error_support(geom, radius)) {
    return 0.0;
  }
  const double ratio = geom.d_hat / (radius * geom.phi);
  const double value = 0.75 * ratio * (1.0 - ratio * ratio * x * x);
  return value > 0.0 ? value : 0.0;
}

double error_variance(const LinkGeometry& geom, double radius) noexcept {
  const double s = radius * geom.phi / geom.d_hat;
  return s * s / 5.0;
}

double zeta_kernel(double w) noexcept {
  w = std::abs(w);
  if (w < kKernelTaylorThreshold) {
    const double w2 = w * w;
    return 1.0 - w2 / 10.0 + w2 * w2 / 280.0;
  }
  return 3.0 / (w * w) * (std::sin(w) / w - std::cos(w));
}

double zeta_single(const LinkGeometry& geom, double radius, int s) {
  require_index(s, "s");
  return zeta_kernel(kPi * (s - 1) * geom.phi * radius / geom.d_hat);
}

double zeta_pair(const LinkGeometry& geom, double radius, int s, int l) {
  require_index(s, "s");
  require_index(l, "l");
  return zeta_kernel(kPi * std::abs(s - l) * geom.phi * radius / geom.d_hat);
}

double zeta_cross(const LinkGeometry& geom_m, const LinkGeometry& geom_n,
                  double radius, int s, int l) {
  require_index(s, "s");
  require_index(l, "l");
  const auto gm = geom_m.error_gradient();
  const auto gn = geom_n.error_gradient();
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double c = (s - 1) * gm[i] - (l - 1) * gn[i];
    sq += c * c;
  }
  return zeta_kernel(kPi * radius * std::sqrt(sq));
}

}  // namespace irsloc
