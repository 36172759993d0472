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

#ifndef IRSLOC_POWER_CONTROL_HPP
#define IRSLOC_POWER_CONTROL_HPP

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "irsloc/rate.hpp"
#include "irsloc/scenario.hpp"
#include "irsloc/simplex.hpp"

namespace irsloc {

/// Per-watt coefficients (A_k = a_bar_k eta_k rho_d, C_{k,i} = c_bar_{k,i} eta_i rho_d).
UnitCoefficients per_unit_coeffs(const ScenarioConfig& scenario);

struct LpProblem {
  Eigen::MatrixXd d_bar;  ///< row k holds the constraint d_bar_k^T p + rhs_k <= 0
  Eigen::VectorXd rhs;    ///< watts
  std::vector<double> targets;
  /// Optional upper bound on the total transmit power, watts.
  std::optional<double> total_cap;
};

LpProblem build_lp(const UnitCoefficients& coeffs, std::span<const double> targets, double noise,
                   std::optional<double> total_cap = std::nullopt);

struct PowerAllocation {
  std::vector<double> p;  ///< watts, p_k = eta_k rho_d
  double total = 0.0;
  LpStatus status = LpStatus::infeasible;

  bool feasible() const noexcept { return status == LpStatus::optimal; }
};

/// Minimizes the total transmit power subject to the per-user rate targets.
PowerAllocation solve_min_power(const LpProblem& lp);

struct CommonRate {
  double rate = 0.0;         ///< bits/s/Hz
  bool hit_ceiling = false;  ///< true when the ceiling itself is feasible
};

/// Largest common target that keeps the LP feasible, found by bisection.
CommonRate max_feasible_common_rate(const UnitCoefficients& coeffs, double noise,
                                    std::optional<double> total_cap, double tol,
                                    double ceiling = 30.0);
CommonRate max_feasible_common_rate(const ScenarioConfig& scenario, double tol,
                                    double ceiling = 30.0);

}  // namespace irsloc

#endif  // IRSLOC_POWER_CONTROL_HPP
