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


#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "irsloc/errors.hpp"
#include "irsloc/tools/experiments.hpp"
#include "irsloc/tools/presets.hpp"

namespace irsloc::tools {
namespace {

double cell(const CsvTable& t, std::size_t row, const std::string& column) {
  for (std::size_t c = 0; c < t.header().size(); ++c) {
    if (t.header()[c] == column) return std::stod(t.rows().at(row).at(c));
  }
  ADD_FAILURE() << "no column " << column;
  return std::nan("");
}

std::size_t row_of(const CsvTable& t, const std::string& first) {
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (t.rows()[r][0] == first) return r;
  }
  ADD_FAILURE() << "no row " << first;
  return 0;
}

McOptions no_mc() {
  McOptions mc;
  mc.enabled = false;
  return mc;
}

TEST(Experiments, AnalyzeReportsSumRow) {
  const CsvTable t = analyze(ScenarioConfig::reference_deployment());
  ASSERT_EQ(t.rows().size(), 5u);
  EXPECT_EQ(t.rows().back().front(), "sum");
  EXPECT_NEAR(std::stod(t.rows().back().back()), 8.689358914350922, 1e-9);
  double total = 0.0;
  for (int k = 0; k < 4; ++k) total += cell(t, k, "rate_bps_hz");
  EXPECT_NEAR(total, 8.689358914350922, 1e-9);
}

TEST(Experiments, CompareSmallBudgetIsClose) {
  McOptions mc;
  mc.n_location_draws = 20;
  mc.n_fading_draws = 200;
  const CsvTable t = compare(ScenarioConfig::reference_deployment(), mc);
  const std::size_t sum = row_of(t, "sum");
  EXPECT_NEAR(cell(t, sum, "rate_monte_carlo"), cell(t, sum, "rate_closed_form"), 0.5);
}

TEST(Experiments, PowerControlTable) {
  ScenarioConfig cfg = ScenarioConfig::reference_deployment();
  const std::vector<double> targets = {0.0, 0.5, 1.0, 2.0, 50.0};
  const CsvTable t = run_power_control(cfg, targets);
  ASSERT_EQ(t.rows().size(), targets.size());
  EXPECT_EQ(t.rows()[0][1], "0 W");
  double previous = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r + 1 < targets.size(); ++r) {
    const double dbm = std::stod(t.rows()[r][1]);
    EXPECT_GT(dbm, previous);
    previous = dbm;
  }
  EXPECT_EQ(t.rows().back()[1], "infeasible");
}

TEST(Experiments, LargerUncertaintyLosesFeasibilityEarlier) {
  const CsvTable t = run_preset("fig8", ScenarioConfig::reference_deployment(), no_mc());
  auto first_infeasible = [&](const std::string& column) {
    std::size_t c = 0;
    while (t.header()[c] != column) ++c;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
      if (t.rows()[r][c] == "infeasible") return std::stod(t.rows()[r][0]);
    }
    return std::numeric_limits<double>::infinity();
  };
  const double small = first_infeasible("total_power_dbm_upsilon_0.5");
  const double large = first_infeasible("total_power_dbm_upsilon_2");
  EXPECT_LT(large, small);
  EXPECT_TRUE(std::isfinite(large));
}

TEST(Experiments, UnknownNamesRejected) {
  const ScenarioConfig cfg = ScenarioConfig::reference_deployment();
  EXPECT_THROW(run_preset("fig9", cfg, no_mc()), ArgumentError);
  const std::vector<std::string> values = {"1"};
  EXPECT_THROW(run_sweep(cfg, "kappa", values, no_mc()), ArgumentError);
  EXPECT_THROW(run_sweep(cfg, "upsilon", {}, no_mc()), ArgumentError);
  EXPECT_THROW(parse_number_list("1,x"), ArgumentError);
}

TEST(Experiments, ListParsing) {
  EXPECT_EQ(split_list(" a, b ,,c "), (std::vector<std::string>{"a", "b", "c"}));
  const auto v = parse_number_list("0.5, 2, inf");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_TRUE(std::isinf(v[2]));
}

TEST(Experiments, SweepMatchesAnalyze) {
  const std::vector<std::string> values = {"0.5", "2"};
  const CsvTable t = run_sweep(ScenarioConfig::reference_deployment(), "upsilon", values, no_mc());
  EXPECT_NEAR(cell(t, 0, "closed_form"), 11.377529019981193, 1e-9);
  EXPECT_NEAR(cell(t, 1, "closed_form"), 4.414238973551152, 1e-9);
}

TEST(Experiments, PowerSweepReachesExpectedLevels) {
  const CsvTable t = run_preset("fig2", ScenarioConfig::reference_deployment(), no_mc());
  const std::size_t r = row_of(t, "40");
  EXPECT_NEAR(cell(t, r, "closed_form_upsilon_0.5"), 16.0, 1.6);
  EXPECT_NEAR(cell(t, r, "closed_form_upsilon_2"), 5.5, 0.825);
}

TEST(Experiments, MoreElementsHelpInPureLos) {
  const CsvTable t = run_preset("fig6", ScenarioConfig::reference_deployment(), no_mc());
  const std::size_t r = row_of(t, "inf");
  EXPECT_NEAR(cell(t, r, "closed_form_M8") - cell(t, r, "closed_form_M4"), 6.0, 1.5);
  EXPECT_NEAR(cell(t, r, "closed_form_M8"), 9.008135900449314, 1e-9);
  EXPECT_NEAR(cell(t, r, "closed_form_M4"), 3.8653913531673427, 1e-9);
  // The reference directions are only nearly orthogonal, so the limit is close but not exact.
  EXPECT_NEAR(cell(t, r, "no_nlos_M8"), cell(t, r, "closed_form_M8"), 0.01);
  EXPECT_NEAR(cell(t, r, "no_nlos_M4"), cell(t, r, "closed_form_M4"), 0.01);
}

TEST(Experiments, PresetNamesAreComplete) {
  EXPECT_EQ(preset_names(),
            (std::vector<std::string>{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}));
}

}  // namespace
}  // namespace irsloc::tools
