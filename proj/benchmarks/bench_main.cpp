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


#include <vector>

#include <benchmark/benchmark.h>

#include "irsloc/geometry.hpp"
#include "irsloc/montecarlo.hpp"
#include "irsloc/power_control.hpp"
#include "irsloc/rate.hpp"
#include "irsloc/scenario.hpp"

namespace {

using namespace irsloc;

void BM_ZetaKernel(benchmark::State& state) {
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_kernel(w));
    w += 1e-3;
    if (w > 20.0) w = 0.0;
  }
}
BENCHMARK(BM_ZetaKernel);

void BM_ClosedForm(benchmark::State& state) {
  ScenarioConfig cfg = ScenarioConfig::reference_deployment();
  cfg.elements = static_cast<int>(state.range(0));
  const SystemModel model = build_model(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_breakdown(model));
}
BENCHMARK(BM_ClosedForm)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

// One location draw with the default fading budget.
void BM_MonteCarloDraw(benchmark::State& state) {
  const SystemModel model = build_model(ScenarioConfig::reference_deployment());
  McConfig mc;
  mc.n_location_draws = 1;
  mc.n_fading_draws = 1000;
  mc.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mc_breakdown(model, mc));
}
BENCHMARK(BM_MonteCarloDraw)->Unit(benchmark::kMillisecond);

void BM_MinPowerLp(benchmark::State& state) {
  const SystemModel model = build_model(ScenarioConfig::reference_deployment());
  const UnitCoefficients coeffs = unit_coefficients(model);
  const std::vector<double> targets(4, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_min_power(build_lp(coeffs, targets, model.noise)));
}
BENCHMARK(BM_MinPowerLp)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
