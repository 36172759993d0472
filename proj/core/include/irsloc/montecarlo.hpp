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

#ifndef IRSLOC_MONTECARLO_HPP
#define IRSLOC_MONTECARLO_HPP

#include <cstdint>

#include "irsloc/geometry.hpp"
#include "irsloc/rate.hpp"
#include "irsloc/scenario.hpp"

namespace irsloc {

enum class ErrorMode {
  linearized,      ///< true AOD = estimated AOD + first-order error
  exact_geometry,  ///< true AOD recomputed from the displaced user position
};

const char* to_string(ErrorMode mode) noexcept;

struct McConfig {
  int n_location_draws = 200;
  int n_fading_draws = 1000;
  std::uint64_t seed = 1;
  ErrorMode mode = ErrorMode::linearized;
  /// Worker threads; 0 uses the hardware concurrency. Does not affect results.
  int threads = 0;

  /// Throws ArgumentError unless both draw counts are >= 1 and threads >= 0.
  void validate() const;
};

/// Sample-mean estimate of A_k, B_k and C_{k,i} at the model's transmit powers.
RateBreakdown mc_breakdown(const SystemModel& model, const McConfig& cfg);
RateBreakdown mc_breakdown(const ScenarioConfig& scenario, const McConfig& cfg);

struct ZetaEstimate {
  double real = 0.0;
  double imag = 0.0;
  int n = 0;
};

/// Sample mean of exp(j pi (s-l) eps) over `n` uniform ball draws.
ZetaEstimate mc_zeta(const LinkGeometry& geom, double radius, int s, int l, int n,
                     std::uint64_t seed);

/// Sample mean of exp(j pi [(s-1) eps_m - (l-1) eps_n]) with both errors
/// driven by the same displacement.
ZetaEstimate mc_zeta(const LinkGeometry& geom_m, const LinkGeometry& geom_n, double radius,
                     int s, int l, int n, std::uint64_t seed);

}  // namespace irsloc

#endif  // IRSLOC_MONTECARLO_HPP
