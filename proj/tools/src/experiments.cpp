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

#include "irsloc/tools/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "irsloc/errors.hpp"
#include "irsloc/power_control.hpp"
#include "irsloc/tools/config_io.hpp"

namespace irsloc::tools {

namespace {

constexpr int kDefaultLoc = 200;
constexpr int kDefaultFade = 1000;

std::vector<std::string> breakdown_header(int users) {
  std::vector<std::string> h = {"user", "a_w", "b_w", "interference_w", "noise_w"};
  for (int i = 0; i < users; ++i) h.push_back("c_" + std::to_string(i) + "_w");
  h.push_back("sinr");
  h.push_back("rate_bps_hz");
  return h;
}

CsvTable breakdown_table(const RateBreakdown& b) {
  const int K = b.users();
  CsvTable table(breakdown_header(K));
  for (int k = 0; k < K; ++k) {
    std::vector<std::string> row = {std::to_string(k), format_number(b.a[k]), format_number(b.b[k]),
                                    format_number(b.interference(k)), format_number(b.noise)};
    for (int i = 0; i < K; ++i) row.push_back(format_number(b.c(k, i)));
    row.push_back(format_number(b.sinr(k)));
    row.push_back(format_number(b.rate[k]));
    table.add_row(std::move(row));
  }
  std::vector<std::string> total(table.header().size());
  total.front() = "sum";
  total.back() = format_number(sum_rate(b));
  table.add_row(std::move(total));
  return table;
}

double relative_gap(double reference, double estimate) {
  if (reference == 0.0) return estimate == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(estimate - reference) / std::abs(reference);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

McConfig McOptions::resolve(const ScenarioConfig& scenario, int default_loc, int default_fade) const {
  McConfig cfg;
  cfg.n_location_draws = n_location_draws.value_or(default_loc);
  cfg.n_fading_draws = n_fading_draws.value_or(default_fade);
  cfg.seed = scenario.seed;
  cfg.mode = mode;
  cfg.threads = threads;
  cfg.validate();
  return cfg;
}

CsvTable analyze(const ScenarioConfig& scenario, std::optional<Corollary> corollary) {
  const SystemModel model = build_model(scenario);
  if (corollary) return breakdown_table(rate_corollary(model, *corollary).breakdown);
  return breakdown_table(closed_form_breakdown(model));
}

CsvTable simulate(const ScenarioConfig& scenario, const McOptions& mc) {
  return breakdown_table(mc_breakdown(scenario, mc.resolve(scenario, kDefaultLoc, kDefaultFade)));
}

CsvTable compare(const ScenarioConfig& scenario, const McOptions& mc) {
  const SystemModel model = build_model(scenario);
  const RateBreakdown cf = closed_form_breakdown(model);
  const RateBreakdown sim = mc_breakdown(model, mc.resolve(scenario, kDefaultLoc, kDefaultFade));
  CsvTable table({"user", "rate_closed_form", "rate_monte_carlo", "rate_gap", "a_rel_gap",
                  "c_max_rel_gap"});
  for (int k = 0; k < cf.users(); ++k) {
    double c_gap = 0.0;
    for (int i = 0; i < cf.users(); ++i) c_gap = std::max(c_gap, relative_gap(cf.c(k, i), sim.c(k, i)));
    table.add_row({std::to_string(k), format_number(cf.rate[k]), format_number(sim.rate[k]),
                   format_number(sim.rate[k] - cf.rate[k]), format_number(relative_gap(cf.a[k], sim.a[k])),
                   format_number(c_gap)});
  }
  table.add_row({"sum", format_number(sum_rate(cf)), format_number(sum_rate(sim)),
                 format_number(sum_rate(sim) - sum_rate(cf)), "", ""});
  return table;
}

std::string format_power_dbm(double watts) {
  if (watts == 0.0) return "0 W";
  return format_number(watts_to_dbm(watts));
}

CsvTable run_power_control(const ScenarioConfig& scenario, std::span<const double> targets) {
  const SystemModel model = build_model(scenario);
  const UnitCoefficients coeffs = unit_coefficients(model);
  std::optional<double> cap;
  if (scenario.rho_cap_dbm) cap = dbm_to_watts(*scenario.rho_cap_dbm);

  const int K = model.users;
  std::vector<std::string> header = {"rate_target_bps_hz", "total_power_dbm"};
  for (int k = 0; k < K; ++k) header.push_back("p_" + std::to_string(k) + "_w");
  CsvTable table(std::move(header));
  for (double target : targets) {
    const std::vector<double> common(K, target);
    const PowerAllocation alloc = solve_min_power(build_lp(coeffs, common, model.noise, cap));
    std::vector<std::string> row = {format_number(target)};
    if (alloc.feasible()) {
      row.push_back(format_power_dbm(alloc.total));
      for (double p : alloc.p) row.push_back(format_number(p));
    } else {
      row.push_back("infeasible");
      row.resize(table.header().size());
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable run_sweep(const ScenarioConfig& scenario, std::string_view param,
                   std::span<const std::string> values, const McOptions& mc) {
  static const std::vector<std::string> allowed = {"rho_d_dbm", "upsilon", "M", "N", "v", "rate_target"};
  if (std::find(allowed.begin(), allowed.end(), param) == allowed.end()) {
    throw ArgumentError("unknown sweep parameter '" + std::string(param) +
                        "' (expected rho_d_dbm, upsilon, M, N, v or rate_target)");
  }
  if (values.empty()) throw ArgumentError("sweep needs at least one value");
  if (param == "rate_target") {
    std::vector<double> targets;
    for (const auto& v : values) {
      const auto parsed = parse_number_list(v);
      targets.insert(targets.end(), parsed.begin(), parsed.end());
    }
    return run_power_control(scenario, targets);
  }

  std::vector<std::string> header = {std::string(param), "closed_form"};
  if (mc.enabled) header.push_back("monte_carlo");
  CsvTable table(std::move(header));
  for (const auto& value : values) {
    ScenarioConfig point = scenario;
    set_parameter(point, param, value);
    const SystemModel model = build_model(point);
    std::vector<std::string> row = {value, format_number(sum_rate(closed_form_breakdown(model)))};
    if (mc.enabled) {
      row.push_back(format_number(sum_rate(mc_breakdown(model, mc.resolve(point, kDefaultLoc, kDefaultFade)))));
    }
    table.add_row(std::move(row));
  }
  return table;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string item = trim(text.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text)) {
    if (item == "inf" || item == "+inf") {
      out.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ArgumentError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace irsloc::tools
