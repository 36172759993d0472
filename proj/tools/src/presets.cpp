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

#include "irsloc/tools/presets.hpp"

#include <functional>
#include <limits>
#include <map>
#include <string>

#include "irsloc/errors.hpp"
#include "irsloc/power_control.hpp"
#include "irsloc/rate.hpp"

namespace irsloc::tools {

namespace {

using Row = std::vector<std::string>;

std::vector<double> range(double first, double last, double step) {
  std::vector<double> out;
  for (int i = 0; first + i * step <= last + 1e-9; ++i) out.push_back(first + i * step);
  return out;
}

std::string label(double v) { return format_number(v); }

// Monte Carlo breakdown at 1 W total power; transmit powers only scale A, B
// and C, so one run serves a whole power sweep.
RateBreakdown unit_power_mc(ScenarioConfig scenario, const McOptions& mc, int loc, int fade) {
  scenario.rho_d_dbm = 30.0;
  return mc_breakdown(build_model(scenario), mc.resolve(scenario, loc, fade));
}

double scaled_rate(const RateBreakdown& unit, double rho_d_dbm) {
  return sum_rate(unit.scaled(dbm_to_watts(rho_d_dbm)));
}

double closed_form_rate(const ScenarioConfig& s) { return sum_rate(closed_form_breakdown(build_model(s))); }

double corollary_rate(const ScenarioConfig& s, Corollary c) {
  return sum_rate(rate_corollary(build_model(s), c).breakdown);
}

double mc_rate(const ScenarioConfig& s, const McOptions& mc, int loc, int fade) {
  return sum_rate(mc_breakdown(build_model(s), mc.resolve(s, loc, fade)));
}

// Sum rate versus transmit power for a list of scenario variants.
CsvTable power_sweep(const std::vector<std::pair<std::string, ScenarioConfig>>& variants,
                     const McOptions& mc, bool with_perfect_location) {
  const std::vector<double> powers = range(0.0, 50.0, 5.0);
  Row header = {"rho_d_dbm"};
  std::vector<RateBreakdown> unit_mc;
  for (const auto& [name, cfg] : variants) {
    header.push_back("closed_form_" + name);
    if (mc.enabled) {
      header.push_back("monte_carlo_" + name);
      unit_mc.push_back(unit_power_mc(cfg, mc, 200, 1000));
    }
    if (with_perfect_location) header.push_back("perfect_location_" + name);
  }
  CsvTable table(std::move(header));
  for (double p : powers) {
    Row row = {label(p)};
    for (std::size_t v = 0; v < variants.size(); ++v) {
      ScenarioConfig cfg = variants[v].second;
      cfg.rho_d_dbm = p;
      row.push_back(format_number(closed_form_rate(cfg)));
      if (mc.enabled) row.push_back(format_number(scaled_rate(unit_mc[v], p)));
      if (with_perfect_location) row.push_back(format_number(corollary_rate(cfg, Corollary::perfect_location)));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable fig2(const ScenarioConfig& base, const McOptions& mc) {
  std::vector<std::pair<std::string, ScenarioConfig>> variants;
  for (double u : {0.5, 2.0}) {
    ScenarioConfig cfg = base;
    cfg.upsilon = u;
    cfg.v_b2i = cfg.v_i2u = RicianFactor(5.0);
    variants.emplace_back("upsilon_" + label(u), cfg);
  }
  return power_sweep(variants, mc, false);
}

CsvTable fig3(const ScenarioConfig& base, const McOptions& mc) {
  ScenarioConfig ortho = base;
  ortho.irs = ScenarioConfig::reference_deployment().irs;
  ScenarioConfig skewed = base;
  skewed.irs = nonorthogonal_irs();
  return power_sweep({{"orthogonal", ortho}, {"nonorthogonal", skewed}}, mc, true);
}

// Each IRS slides along the segment from the BS to the user it serves.
CsvTable fig4(const ScenarioConfig& base, const McOptions& mc) {
  const std::vector<double> fractions = range(0.1, 0.9, 0.1);
  const std::vector<double> radii = {0.5, 2.0};
  Row header = {"irs_fraction"};
  for (double u : radii) {
    header.push_back("closed_form_upsilon_" + label(u));
    if (mc.enabled) header.push_back("monte_carlo_upsilon_" + label(u));
  }
  CsvTable table(std::move(header));
  for (double f : fractions) {
    Row row = {label(f)};
    for (double u : radii) {
      ScenarioConfig cfg = base;
      cfg.upsilon = u;
      for (int k = 0; k < cfg.users; ++k) {
        const int m = cfg.assignment.empty() ? k : cfg.assignment[k];
        cfg.irs[m] = cfg.bs + f * (cfg.users_est[k] - cfg.bs);
      }
      row.push_back(format_number(closed_form_rate(cfg)));
      if (mc.enabled) row.push_back(format_number(mc_rate(cfg, mc, 50, 500)));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable fig5(const ScenarioConfig& base, const McOptions& mc) {
  const std::vector<int> sizes = {4, 8, 16, 32, 64, 128};
  const std::vector<int> antennas = {5, 10};
  Row header = {"M"};
  for (int n : antennas) {
    const std::string tag = "N" + std::to_string(n);
    header.push_back("closed_form_" + tag);
    if (mc.enabled) header.push_back("monte_carlo_" + tag);
    header.push_back("large_M_" + tag);
  }
  CsvTable table(std::move(header));
  for (int m : sizes) {
    Row row = {std::to_string(m)};
    for (int n : antennas) {
      ScenarioConfig cfg = base;
      cfg.upsilon = 0.0;
      cfg.rho_d_dbm = 40.0;
      cfg.elements = m;
      cfg.antennas = n;
      row.push_back(format_number(closed_form_rate(cfg)));
      if (mc.enabled) row.push_back(format_number(mc_rate(cfg, mc, 20, 200)));
      row.push_back(format_number(corollary_rate(cfg, Corollary::large_m)));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable fig6(const ScenarioConfig& base, const McOptions& mc) {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> factors = {0.1, 0.3, 1, 3, 10, 30, 100, 300, 1000, inf};
  const std::vector<int> sizes = {4, 8};
  Row header = {"v"};
  for (int m : sizes) {
    const std::string tag = "M" + std::to_string(m);
    header.push_back("closed_form_" + tag);
    if (mc.enabled) header.push_back("monte_carlo_" + tag);
    header.push_back("no_nlos_" + tag);
  }
  CsvTable table(std::move(header));
  for (double v : factors) {
    Row row = {label(v)};
    for (int m : sizes) {
      ScenarioConfig cfg = base;
      cfg.upsilon = 0.0;
      cfg.rho_d_dbm = 30.0;
      cfg.elements = m;
      cfg.v_b2i = cfg.v_i2u = RicianFactor(v);
      cfg.v_b2i_override.clear();
      cfg.v_i2u_override.clear();
      row.push_back(format_number(closed_form_rate(cfg)));
      if (mc.enabled) row.push_back(format_number(mc_rate(cfg, mc, 20, 500)));
      ScenarioConfig limit = cfg;
      limit.v_b2i = limit.v_i2u = RicianFactor::infinite();
      row.push_back(format_number(corollary_rate(limit, Corollary::no_nlos)));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable fig7(const ScenarioConfig& base, const McOptions& mc) {
  const std::vector<int> antennas = {1, 2, 4, 8, 16, 32, 64};
  Row header = {"N", "closed_form"};
  if (mc.enabled) header.push_back("monte_carlo");
  header.push_back("large_N");
  CsvTable table(std::move(header));
  for (int n : antennas) {
    ScenarioConfig cfg = base;
    cfg.upsilon = 0.0;
    cfg.rho_d_dbm = 40.0;
    cfg.antennas = n;
    Row row = {std::to_string(n), format_number(closed_form_rate(cfg))};
    if (mc.enabled) row.push_back(format_number(mc_rate(cfg, mc, 20, 200)));
    row.push_back(format_number(corollary_rate(cfg, Corollary::large_n)));
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable fig8(const ScenarioConfig& base, const McOptions&) {
  const std::vector<double> targets = range(0.0, 8.0, 0.5);
  const std::vector<double> radii = {0.5, 2.0};
  Row header = {"rate_target_bps_hz"};
  std::vector<CsvTable> columns;
  for (double u : radii) {
    header.push_back("total_power_dbm_upsilon_" + label(u));
    ScenarioConfig cfg = base;
    cfg.upsilon = u;
    columns.push_back(run_power_control(cfg, targets));
  }
  CsvTable table(std::move(header));
  for (std::size_t r = 0; r < targets.size(); ++r) {
    Row row = {label(targets[r])};
    for (const auto& col : columns) row.push_back(col.rows()[r][1]);
    table.add_row(std::move(row));
  }
  return table;
}

using PresetFn = std::function<CsvTable(const ScenarioConfig&, const McOptions&)>;

const std::map<std::string, PresetFn, std::less<>>& registry() {
  static const std::map<std::string, PresetFn, std::less<>> presets = {
      {"fig2", fig2}, {"fig3", fig3}, {"fig4", fig4}, {"fig5", fig5},
      {"fig6", fig6}, {"fig7", fig7}, {"fig8", fig8}};
  return presets;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Position3> nonorthogonal_irs() {
  return {{278, 113, -20}, {338, 41, -20}, {367, -45, -20}, {370, -151, -20}};
}

CsvTable run_preset(std::string_view name, const ScenarioConfig& base, const McOptions& mc) {
  const auto& presets = registry();
  const auto it = presets.find(name);
  if (it == presets.end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ArgumentError("unknown preset '" + std::string(name) + "' (expected one of " + known + ")");
  }
  return it->second(base, mc);
}

}  // namespace irsloc::tools
