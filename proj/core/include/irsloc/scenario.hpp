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

#ifndef IRSLOC_SCENARIO_HPP
#define IRSLOC_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "irsloc/beamforming.hpp"
#include "irsloc/channel.hpp"
#include "irsloc/geometry.hpp"
#include "irsloc/link_grid.hpp"

namespace irsloc {

/// Static description of a deployment, in the units a user writes down
/// (dB, dBm, meters).
struct ScenarioConfig {
  Position3 bs{};
  std::vector<Position3> irs;
  std::vector<Position3> users_est;
  double upsilon = 1.0;  ///< location uncertainty radius, meters
  int antennas = 5;      ///< N
  int elements = 16;     ///< M
  int users = 4;         ///< K
  double rho_d_dbm = 30.0;
  /// Power control coefficients; empty means uniform 1/K.
  std::vector<double> eta;
  double c0_db = -30.0;
  double kappa_b2i = 2.5;
  double kappa_i2u = 2.5;
  RicianFactor v_b2i{5.0};
  RicianFactor v_i2u{5.0};
  /// Per-IRS override of v_b2i, keyed by IRS index.
  std::map<int, RicianFactor> v_b2i_override;
  /// Per-link override of v_i2u, keyed by (IRS index, user index).
  std::map<std::pair<int, int>, RicianFactor> v_i2u_override;
  double bandwidth_hz = 180e3;
  double noise_psd_dbm_hz = -169.0;
  std::uint64_t seed = 1;
  /// User k is served by IRS assignment[k]; empty means identity.
  std::vector<int> assignment;
  /// Optional cap on the total BS power used by the power-control LP.
  std::optional<double> rho_cap_dbm;

  /// The reference four-user deployment.
  static ScenarioConfig reference_deployment();

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

/// Fully resolved scenario in linear units. Everything the closed forms and
/// the simulator need, computed once.
struct SystemModel {
  int antennas = 0;
  int elements = 0;
  int users = 0;
  double upsilon = 0.0;
  double rho_d = 0.0;  ///< watts
  double noise = 0.0;  ///< watts
  std::vector<double> eta;
  std::vector<Position3> irs;
  std::vector<Position3> users_est;
  std::vector<BsIrsAngles> bs_irs;        ///< per IRS
  std::vector<FadingParams> b2i;          ///< per IRS
  LinkGrid<LinkGeometry> i2u;             ///< (IRS m, user k), estimated
  LinkGrid<FadingParams> i2u_fading;      ///< (IRS m, user k)
  std::vector<int> irs_of_user;
  std::vector<int> user_of_irs;

  PowerSplit power_split() const { return {rho_d, eta}; }
};

SystemModel build_model(const ScenarioConfig& config);

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts) noexcept;

}  // namespace irsloc

#endif  // IRSLOC_SCENARIO_HPP
