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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsloc/errors.hpp"
#include "irsloc/power_control.hpp"
#include "irsloc/rate.hpp"
#include "irsloc/tools/config_io.hpp"
#include "irsloc/tools/csv.hpp"
#include "irsloc/tools/experiments.hpp"
#include "irsloc/tools/presets.hpp"

namespace {

using namespace irsloc;
using namespace irsloc::tools;

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> mc_loc;
  std::optional<int> mc_fade;
  std::string mode = "linearized";
  int threads = 0;
  std::vector<std::string> set;
};

ScenarioConfig load(const Globals& g) {
  ScenarioConfig cfg = g.config.empty() ? load_scenario_text("") : load_scenario_file(g.config);
  for (const auto& assignment : g.set) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError(assignment + ": expected key=value");
    set_parameter(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
  }
  if (g.seed) cfg.seed = *g.seed;
  return cfg;
}

McOptions mc_options(const Globals& g) {
  McOptions mc;
  mc.n_location_draws = g.mc_loc;
  mc.n_fading_draws = g.mc_fade;
  mc.mode = g.mode == "exact" ? ErrorMode::exact_geometry : ErrorMode::linearized;
  mc.threads = g.threads;
  return mc;
}

void emit(const Globals& g, const CsvTable& table) {
  if (g.out.empty() || g.out == "-") {
    table.write(std::cout);
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  table.write(file);
}

std::optional<Corollary> parse_corollary(const std::string& name) {
  if (name.empty()) return std::nullopt;
  for (Corollary c : {Corollary::orthogonal, Corollary::perfect_location, Corollary::large_m,
                      Corollary::large_n, Corollary::no_nlos}) {
    if (name == to_string(c)) return c;
  }
  throw ArgumentError("unknown corollary '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Location-aided multi-IRS downlink analyzer and simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "Scenario YAML file (defaults to the reference scenario)");
  app.add_option("--set", g.set, "Override a scenario key, e.g. --set upsilon=0.5 (repeatable)");
  app.add_option("--seed", g.seed, "Random seed (overrides the scenario)");
  app.add_option("--out", g.out, "Output CSV path (default: stdout)");
  app.add_option("--mc-loc", g.mc_loc, "Monte Carlo location draws")->check(CLI::PositiveNumber);
  app.add_option("--mc-fade", g.mc_fade, "Monte Carlo fading draws per location draw")
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", g.mode, "Angle error model for Monte Carlo")
      ->check(CLI::IsMember({"linearized", "exact"}));
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores); results do not depend on it")
      ->check(CLI::NonNegativeNumber);

  std::string corollary;
  auto* analyze_cmd = app.add_subcommand("analyze", "Closed-form per-user rate breakdown");
  analyze_cmd->add_option("--corollary", corollary,
                          "Evaluate a limiting regime instead: orthogonal, perfect_location, "
                          "large_M, large_N or no_nlos");
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo per-user rate breakdown");
  auto* compare_cmd = app.add_subcommand("compare", "Closed form versus Monte Carlo");

  std::string targets_text;
  bool strict = false;
  auto* power_cmd = app.add_subcommand("power", "Minimum-power allocation for common rate targets");
  power_cmd->add_option("--targets", targets_text, "Comma-separated rate targets, bits/s/Hz")->required();
  power_cmd->add_flag("--strict", strict, "Exit with status 3 if any target is infeasible");

  std::string preset_name;
  bool no_mc = false;
  auto* preset_cmd = app.add_subcommand("preset", "Reproduce a figure as CSV");
  preset_cmd->add_option("name", preset_name, "fig2 ... fig8")->required();
  preset_cmd->add_flag("--no-mc", no_mc, "Skip the Monte Carlo series");

  std::string param;
  std::string values_text;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sum rate versus one parameter");
  sweep_cmd->add_option("--param", param, "rho_d_dbm, upsilon, M, N, v or rate_target")->required();
  sweep_cmd->add_option("--values", values_text, "Comma-separated values")->required();
  sweep_cmd->add_flag("--no-mc", no_mc, "Skip the Monte Carlo column");

  CLI11_PARSE(app, argc, argv);

  try {
    const ScenarioConfig cfg = load(g);
    McOptions mc = mc_options(g);
    mc.enabled = !no_mc;
    if (*analyze_cmd) {
      emit(g, analyze(cfg, parse_corollary(corollary)));
    } else if (*simulate_cmd) {
      emit(g, simulate(cfg, mc));
    } else if (*compare_cmd) {
      emit(g, compare(cfg, mc));
    } else if (*power_cmd) {
      const CsvTable table = run_power_control(cfg, parse_number_list(targets_text));
      emit(g, table);
      if (strict) {
        for (const auto& row : table.rows()) {
          if (row[1] == "infeasible") return kExitInfeasible;
        }
      }
    } else if (*preset_cmd) {
      emit(g, run_preset(preset_name, cfg, mc));
    } else if (*sweep_cmd) {
      emit(g, run_sweep(cfg, param, split_list(values_text), mc));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
