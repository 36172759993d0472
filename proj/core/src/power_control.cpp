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

#include "irsloc/power_control.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irsloc/errors.hpp"

namespace irsloc {

UnitCoefficients per_unit_coeffs(const ScenarioConfig& scenario) {
  return unit_coefficients(build_model(scenario));
}

LpProblem build_lp(const UnitCoefficients& coeffs, std::span<const double> targets, double noise,
                   std::optional<double> total_cap) {
  const int K = static_cast<int>(coeffs.a_bar.size());
  if (static_cast<int>(targets.size()) != K) {
    throw ArgumentError("build_lp: expected " + std::to_string(K) + " targets, got " +
                        std::to_string(targets.size()));
  }
  if (!(noise >= 0.0)) throw ArgumentError("build_lp: noise must be >= 0");
  if (total_cap && !(*total_cap > 0.0)) throw ArgumentError("build_lp: total cap must be > 0");

  LpProblem lp;
  lp.d_bar.resize(K, K);
  lp.rhs.resize(K);
  lp.targets.assign(targets.begin(), targets.end());
  lp.total_cap = total_cap;
  for (int k = 0; k < K; ++k) {
    if (!(targets[k] >= 0.0) || !std::isfinite(targets[k])) {
      throw ArgumentError("build_lp: rate targets must be finite and >= 0");
    }
    const double gamma = std::exp2(targets[k]) - 1.0;
    for (int i = 0; i < K; ++i) lp.d_bar(k, i) = gamma * coeffs.c_bar(k, i);
    lp.d_bar(k, k) = gamma * coeffs.b_bar[k] - coeffs.a_bar[k];
    lp.rhs[k] = gamma * noise;
  }
  return lp;
}

PowerAllocation solve_min_power(const LpProblem& lp) {
  const int K = static_cast<int>(lp.rhs.size());
  PowerAllocation out;
  out.p.assign(K, 0.0);

  // Rows scaled to unit max coefficient, then p = p0 q so the RHS is O(1).
  InequalityLp scaled;
  scaled.a = Eigen::MatrixXd::Zero(K + (lp.total_cap ? 1 : 0), K);
  scaled.b = Eigen::VectorXd::Zero(scaled.a.rows());
  scaled.c = Eigen::VectorXd::Ones(K);
  std::vector<double> row_scale(K, 0.0);
  double p0 = 0.0;
  for (int k = 0; k < K; ++k) {
    row_scale[k] = lp.d_bar.row(k).cwiseAbs().maxCoeff();
    if (row_scale[k] == 0.0) {
      if (lp.rhs[k] > 0.0) return out;  // 0 <= -rhs_k cannot hold
      continue;
    }
    p0 = std::max(p0, lp.rhs[k] / row_scale[k]);
  }
  if (p0 == 0.0) p0 = 1.0;
  for (int k = 0; k < K; ++k) {
    if (row_scale[k] == 0.0) continue;
    scaled.a.row(k) = lp.d_bar.row(k) / row_scale[k];
    scaled.b[k] = -lp.rhs[k] / (row_scale[k] * p0);
  }
  if (lp.total_cap) {
    scaled.a.row(K).setOnes();
    scaled.b[K] = *lp.total_cap / p0;
  }

  const LpSolution sol = solve_simplex(scaled);
  if (sol.status == LpStatus::unbounded) {
    throw NumericalError("power control LP reported unbounded; objective is bounded below by 0");
  }
  if (sol.status == LpStatus::infeasible) return out;

  for (int k = 0; k < K; ++k) out.p[k] = sol.x[k] * p0;
  out.status = LpStatus::optimal;
  for (double v : out.p) out.total += v;
  return out;
}

CommonRate max_feasible_common_rate(const UnitCoefficients& coeffs, double noise,
                                    std::optional<double> total_cap, double tol,
                                    double ceiling) {
  if (!(tol > 0.0)) throw ArgumentError("max_feasible_common_rate: tol must be > 0");
  if (!(ceiling > 0.0)) throw ArgumentError("max_feasible_common_rate: ceiling must be > 0");
  const int K = static_cast<int>(coeffs.a_bar.size());
  auto feasible = [&](double rate) {
    const std::vector<double> targets(K, rate);
    return solve_min_power(build_lp(coeffs, targets, noise, total_cap)).feasible();
  };
  if (!feasible(0.0)) {
    throw NumericalError("power control LP is infeasible at zero rate targets");
  }
  if (feasible(ceiling)) return {ceiling, true};
  double lo = 0.0;
  double hi = ceiling;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return {lo, false};
}

CommonRate max_feasible_common_rate(const ScenarioConfig& scenario, double tol, double ceiling) {
  const SystemModel model = build_model(scenario);
  std::optional<double> cap;
  if (scenario.rho_cap_dbm) cap = dbm_to_watts(*scenario.rho_cap_dbm);
  return max_feasible_common_rate(unit_coefficients(model), model.noise, cap, tol, ceiling);
}

}  // namespace irsloc
