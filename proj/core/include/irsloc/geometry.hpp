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

#ifndef IRSLOC_GEOMETRY_HPP
#define IRSLOC_GEOMETRY_HPP

#include <array>

namespace irsloc {

class RandomStream;

/// Cartesian position in meters. The BS sits at the origin; all ULAs lie
/// along the y axis.
struct Position3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Position3&, const Position3&) = default;
};

Position3 operator+(const Position3& a, const Position3& b) noexcept;
Position3 operator-(const Position3& a, const Position3& b) noexcept;
Position3 operator*(double s, const Position3& p) noexcept;
double norm(const Position3& p) noexcept;
bool is_finite(const Position3& p) noexcept;

/// Estimated IRS -> user link as seen by the IRS.
///
/// The direction cosines point from the (estimated) user towards the IRS,
/// i.e. cos_y = (y_irs - y_user) / d_hat, which is also the effective AOD used
/// to steer the IRS towards that user.
struct LinkGeometry {
  double d_hat = 1.0;
  double cos_x = 0.0;
  double cos_y = 0.0;
  double cos_z = 1.0;
  /// Spread coefficient: |gradient of the AOD w.r.t. the user position| * d_hat.
  double phi = 1.0;

  /// Coefficients (c_x, c_y, c_z) such that the linearized AOD error is
  /// c_x dx + c_y dy + c_z dz.
  std::array<double, 3> error_gradient() const noexcept;
};

struct LocationError {
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;

  double norm() const noexcept;
};

/// Effective angles of the BS -> IRS LOS path (half-wavelength spacing).
struct BsIrsAngles {
  double aod = 0.0;  ///< at the BS array
  double aoa = 0.0;  ///< at the IRS array
};

BsIrsAngles bs_irs_angles(const Position3& bs, const Position3& irs);

LinkGeometry link_geometry(const Position3& irs, const Position3& est_user);

/// Exact effective AOD from `irs` towards a user at `user`.
double irs_user_aod(const Position3& irs, const Position3& user);

/// Uniform draw over the solid ball of the given radius (rejection from the
/// bounding cube).
LocationError sample_location_error(double radius, RandomStream& rng);

/// First-order AOD error induced by displacing the user by `err`.
double angle_error(const LinkGeometry& geom, const LocationError& err) noexcept;

/// Half-width of the support of the AOD error, radius * phi / d_hat.
double error_support(const LinkGeometry& geom, double radius) noexcept;

/// Density of the AOD error when the user is uniform in a ball of `radius`.
/// Throws DegenerateDistributionError when phi == 0.
double error_pdf(const LinkGeometry& geom, double radius, double x);

/// Variance of the AOD error (the mean is always zero).
double error_variance(const LinkGeometry& geom, double radius) noexcept;

/// Characteristic-function kernel (3/w^2)(sin w / w - cos w), continuous at 0.
double zeta_kernel(double w) noexcept;

/// E{exp(j pi (s-1) eps)} for element index s >= 1.
double zeta_single(const LinkGeometry& geom, double radius, int s);

/// E{exp(j pi (s-l) eps)} for element indices s, l >= 1.
double zeta_pair(const LinkGeometry& geom, double radius, int s, int l);

/// E{exp(j pi [(s-1) eps_m - (l-1) eps_n])} where eps_m and eps_n are the
/// errors of two IRS links that share the same user displacement.
double zeta_cross(const LinkGeometry& geom_m, const LinkGeometry& geom_n,
                  double radius, int s, int l);

}  // namespace irsloc

#endif  // IRSLOC_GEOMETRY_HPP
