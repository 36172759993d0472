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

#ifndef IRSLOC_TOOLS_EXPERIMENTS_HPP
#define IRSLOC_TOOLS_EXPERIMENTS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irsloc/montecarlo.hpp"
#include "irsloc/rate.hpp"
#include "irsloc/scenario.hpp"
#include "irsloc/tools/csv.hpp"

namespace irsloc::tools {

/// Monte Carlo settings shared by the verbs. Unset budgets fall back to the
/// verb's (or preset's) default; the seed always comes from the scenario.
struct McOptions {
  std::optional<int> n_location_draws;
  std::optional<int> n_fading_draws;
  ErrorMode mode = ErrorMode::linearized;
  int threads = 0;
  bool enabled = true;

  McConfig resolve(const ScenarioConfig& scenario, int default_loc, int default_fade) const;
};

/// Per-user closed-form breakdown, or a corollary when one is requested.
CsvTable analyze(const ScenarioConfig& scenario, std::optional<Corollary> corollary = std::nullopt);

/// Per-user Monte Carlo breakdown.
CsvTable simulate(const ScenarioConfig& scenario, const McOptions& mc);

/// Closed form next to Monte Carlo with relative gaps.
CsvTable compare(const ScenarioConfig& scenario, const McOptions& mc);

/// One row per common rate target: total power (dBm, "0 W" or "infeasible")
/// and the per-user powers in watts.
CsvTable run_power_control(const ScenarioConfig& scenario, std::span<const double> targets);

/// Sum rate versus one scenario key. `param` is one of rho_d_dbm, upsilon,
/// M, N, v or rate_target (the last delegates to run_power_control).
CsvTable run_sweep(const ScenarioConfig& scenario, std::string_view param,
                   std::span<const std::string> values, const McOptions& mc);

/// Total power in dBm as printed in CSV output.
std::string format_power_dbm(double watts);

/// Parses a comma-separated list of numbers ("inf" allowed).
std::vector<double> parse_number_list(std::string_view text);

/// Splits a comma-separated list, trimming blanks.
std::vector<std::string> split_list(std::string_view text);

}  // namespace irsloc::tools

#endif  // IRSLOC_TOOLS_EXPERIMENTS_HPP
