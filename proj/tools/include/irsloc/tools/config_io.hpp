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

#ifndef IRSLOC_TOOLS_CONFIG_IO_HPP
#define IRSLOC_TOOLS_CONFIG_IO_HPP

#include <filesystem>
#include <string_view>

#include "irsloc/scenario.hpp"

namespace irsloc::tools {

/// Parses a YAML scenario document. Omitted keys keep the reference values
/// of ScenarioConfig::reference_deployment(); an empty document yields that scenario.
/// Throws ConfigError naming the offending key.
ScenarioConfig load_scenario_text(std::string_view text);

ScenarioConfig load_scenario_file(const std::filesystem::path& path);

/// Applies the keys of a YAML mapping on top of `config` and revalidates.
void apply_overrides(ScenarioConfig& config, std::string_view text);

/// Sets a single key from its textual value, e.g. ("upsilon", "0.5").
/// Besides the document keys, "v" sets both Rician factors.
void set_parameter(ScenarioConfig& config, std::string_view key, std::string_view value);

}  // namespace irsloc::tools

#endif  // IRSLOC_TOOLS_CONFIG_IO_HPP
