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

#ifndef IRSLOC_TOOLS_PRESETS_HPP
#define IRSLOC_TOOLS_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "irsloc/scenario.hpp"
#include "irsloc/tools/csv.hpp"
#include "irsloc/tools/experiments.hpp"

namespace irsloc::tools {

const std::vector<std::string>& preset_names();

/// Figure reproductions (fig2 ... fig8). Keys of `base` that a preset does not
/// sweep or fix are used as given. Throws ArgumentError for unknown names.
CsvTable run_preset(std::string_view name, const ScenarioConfig& base, const McOptions& mc);

/// Reference IRS coordinates whose BS directions are not orthogonal.
std::vector<Position3> nonorthogonal_irs();

}  // namespace irsloc::tools

#endif  // IRSLOC_TOOLS_PRESETS_HPP
