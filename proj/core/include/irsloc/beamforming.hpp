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

#ifndef IRSLOC_BEAMFORMING_HPP
#define IRSLOC_BEAMFORMING_HPP

#include <span>
#include <vector>

#include "irsloc/channel.hpp"
#include "irsloc/link_grid.hpp"

namespace irsloc {

/// Total BS power and its per-user split (p_k = eta_k * rho_d).
struct PowerSplit {
  double rho_d = 1.0;  ///< watts
  std::vector<double> eta;

  /// Throws ArgumentError unless rho_d > 0, each eta_k in (0, 1] and
  /// sum(eta) <= 1 + 1e-12.
  void validate() const;
};

struct BeamSet {
  std::vector<CVector> transmit;  ///< w_k, length N
  std::vector<CVector> phase;     ///< xi_m, length M, unit modulus
};

/// MRT beams w_k = sqrt(eta_k rho_d / N) conj(a(aod_k)), one per user.
/// `bs_irs_aods[k]` is the AOD of the IRS serving user k.
std::vector<CVector> transmit_beams(const PowerSplit& split,
                                    std::span<const double> bs_irs_aods, int antennas);

/// Conjugate cascade phase built from the *estimated* IRS -> user AOD and the
/// BS -> IRS AOA: element s is exp(-j pi s (est_aod + aoa)).
CVector phase_shift_beam(double est_i2u_aod, double b2i_aoa, int elements);

/// Effective per-user channels g_k with g_k^T = sum_m g_mk^T diag(xi_m) G_m.
///
/// `irs_user(m, k)` is the channel from IRS m to user k and `phases[m]` the
/// phase beam applied at IRS m. Evaluated as G_m^T (xi_m .* g_mk).
std::vector<CVector> effective_channel(std::span<const BsIrsChannel> bs_irs,
                                       const LinkGrid<IrsUserChannel>& irs_user,
                                       std::span<const CVector> phases);

}  // namespace irsloc

#endif  // IRSLOC_BEAMFORMING_HPP
