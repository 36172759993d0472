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

#include "irsloc/beamforming.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irsloc/errors.hpp"

namespace irsloc {

void PowerSplit::validate() const {
  if (!(rho_d > 0.0) || !std::isfinite(rho_d)) {
    throw ArgumentError("total BS power must be positive and finite");
  }
  double total = 0.0;
  for (double e : eta) {
    if (!(e > 0.0) || e > 1.0) {
      throw ArgumentError("power control coefficients must lie in (0, 1]");
    }
    total += e;
  }
  if (total > 1.0 + 1e-12) {
    throw ArgumentError("power control coefficients sum to more than one");
  }
}

std::vector<CVector> transmit_beams(const PowerSplit& split,
                                    std::span<const double> bs_irs_aods, int antennas) {
  split.validate();
  if (bs_irs_aods.size() != split.eta.size()) {
    throw ArgumentError("one BS -> IRS AOD is required per user");
  }
  std::vector<CVector> beams;
  beams.reserve(split.eta.size());
  for (std::size_t k = 0; k < split.eta.size(); ++k) {
    const double scale = std::sqrt(split.eta[k] * split.rho_d / antennas);
    beams.push_back(scale * steering_vector(antennas, bs_irs_aods[k]).conjugate());
  }
  return beams;
}

CVector phase_shift_beam(double est_i2u_aod, double b2i_aoa, int elements) {
  if (elements < 1) {
    throw ArgumentError("IRS element count must be positive");
  }
  CVector xi(elements);
  const double step = -std::numbers::pi * (est_i2u_aod + b2i_aoa);
  for (int s = 0; s < elements; ++s) {
    xi[s] = std::polar(1.0, step * s);
  }
  return xi;
}

std::vector<CVector> effective_channel(std::span<const BsIrsChannel> bs_irs,
                                       const LinkGrid<IrsUserChannel>& irs_user,
                                       std::span<const CVector> phases) {
  const int irs_count = static_cast<int>(bs_irs.size());
  if (irs_user.irs_count() != irs_count || static_cast<int>(phases.size()) != irs_count) {
    throw ArgumentError("effective_channel: IRS counts of channels and phases differ");
  }
  if (irs_count == 0) {
    return std::vector<CVector>(irs_user.user_count());
  }
  const Eigen::Index elements = bs_irs[0].entries.rows();
  const Eigen::Index antennas = bs_irs[0].entries.cols();
  for (int m = 0; m < irs_count; ++m) {
    if (bs_irs[m].entries.rows() != elements || bs_irs[m].entries.cols() != antennas ||
        phases[m].size() != elements) {
      throw ArgumentError("effective_channel: inconsistent M x N dimensions at IRS " +
                          std::to_string(m));
    }
  }

  std::vector<CVector> g(irs_user.user_count(), CVector::Zero(antennas));
  CVector weighted(elements);
  for (int k = 0; k < irs_user.user_count(); ++k) {
    for (int m = 0; m < irs_count; ++m) {
      const CVector& gmk = irs_user(m, k).entries;
      if (gmk.size() != elements) {
        throw ArgumentError("effective_channel: IRS -> user channel length differs from M");
      }
      weighted = phases[m].cwiseProduct(gmk);
      g[k].noalias() += bs_irs[m].entries.transpose() * weighted;
    }
  }
  return g;
}

}  // namespace irsloc
