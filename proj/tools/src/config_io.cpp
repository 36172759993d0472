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

#include "irsloc/tools/config_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "irsloc/errors.hpp"

namespace irsloc::tools {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError(key + ": " + what);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double as_real(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail(key, "expected a number");
  const std::string text = lower(node.Scalar());
  if (text == "inf" || text == "+inf" || text == "infinity" || text == ".inf" || text == "+.inf") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    fail(key, "expected a number, got '" + node.Scalar() + "'");
  }
}

long long as_integer(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail(key, "expected an integer");
  try {
    return node.as<long long>();
  } catch (const YAML::Exception&) {
    fail(key, "expected an integer, got '" + node.Scalar() + "'");
  }
}

int as_positive_int(const YAML::Node& node, const std::string& key) {
  const long long v = as_integer(node, key);
  if (v < 1 || v > std::numeric_limits<int>::max()) fail(key, "must be a positive integer");
  return static_cast<int>(v);
}

RicianFactor as_rician(const YAML::Node& node, const std::string& key) {
  const double v = as_real(node, key);
  if (std::isnan(v) || v < 0.0) fail(key, "Rician factor must be >= 0 or inf");
  return RicianFactor(v);
}

Position3 as_position(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence() || node.size() != 3) fail(key, "expected [x, y, z]");
  return {as_real(node[0], key + "[0]"), as_real(node[1], key + "[1]"),
          as_real(node[2], key + "[2]")};
}

std::vector<Position3> as_positions(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence()) fail(key, "expected a list of [x, y, z] entries");
  std::vector<Position3> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(as_position(node[i], key + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> split_dots(const std::string& key) {
  std::vector<std::string> parts;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  return parts;
}

int as_index(const std::string& text, const std::string& key) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    fail(key, "expected a non-negative integer index");
  }
  return std::stoi(text);
}

// Applies one key. Returns true when the key sets K explicitly.
bool apply_key(ScenarioConfig& c, const std::string& key, const YAML::Node& value) {
  if (key == "bs") {
    c.bs = as_position(value, key);
  } else if (key == "irs") {
    c.irs = as_positions(value, key);
  } else if (key == "users") {
    c.users_est = as_positions(value, key);
  } else if (key == "upsilon") {
    c.upsilon = as_real(value, key);
  } else if (key == "N") {
    c.antennas = as_positive_int(value, key);
  } else if (key == "M") {
    c.elements = as_positive_int(value, key);
  } else if (key == "K") {
    c.users = as_positive_int(value, key);
    return true;
  } else if (key == "rho_d_dbm") {
    c.rho_d_dbm = as_real(value, key);
  } else if (key == "eta") {
    if (value.IsScalar() && lower(value.Scalar()) == "uniform") {
      c.eta.clear();
    } else if (value.IsSequence()) {
      c.eta.clear();
      for (std::size_t i = 0; i < value.size(); ++i) {
        c.eta.push_back(as_real(value[i], "eta[" + std::to_string(i) + "]"));
      }
    } else {
      fail(key, "expected \"uniform\" or a list of K coefficients");
    }
  } else if (key == "c0_db") {
    c.c0_db = as_real(value, key);
  } else if (key == "kappa_b2i") {
    c.kappa_b2i = as_real(value, key);
  } else if (key == "kappa_i2u") {
    c.kappa_i2u = as_real(value, key);
  } else if (key == "v") {
    c.v_b2i = c.v_i2u = as_rician(value, key);
  } else if (key == "v_b2i") {
    c.v_b2i = as_rician(value, key);
  } else if (key == "v_i2u") {
    c.v_i2u = as_rician(value, key);
  } else if (key == "bandwidth_hz") {
    c.bandwidth_hz = as_real(value, key);
  } else if (key == "noise_psd_dbm_hz") {
    c.noise_psd_dbm_hz = as_real(value, key);
  } else if (key == "seed") {
    try {
      c.seed = value.as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      fail(key, "expected an unsigned 64-bit integer");
    }
  } else if (key == "assignment") {
    if (!value.IsSequence()) fail(key, "expected a list of IRS indices");
    c.assignment.clear();
    for (std::size_t i = 0; i < value.size(); ++i) {
      c.assignment.push_back(static_cast<int>(as_integer(value[i], "assignment[" + std::to_string(i) + "]")));
    }
  } else if (key == "rho_cap_dbm") {
    if (value.IsNull()) {
      c.rho_cap_dbm.reset();
    } else {
      c.rho_cap_dbm = as_real(value, key);
    }
  } else {
    const std::vector<std::string> parts = split_dots(key);
    if (parts.size() == 2 && parts[0] == "v_b2i") {
      c.v_b2i_override[as_index(parts[1], key)] = as_rician(value, key);
    } else if (parts.size() == 3 && parts[0] == "v_i2u") {
      c.v_i2u_override[{as_index(parts[1], key), as_index(parts[2], key)}] = as_rician(value, key);
    } else {
      fail(key, "unknown key");
    }
  }
  return false;
}

void apply_document(ScenarioConfig& c, const YAML::Node& root) {
  if (!root || root.IsNull()) {
    c.validate();
    return;
  }
  if (!root.IsMap()) fail("<document>", "expected a mapping of keys to values");
  bool explicit_k = false;
  for (const auto& item : root) {
    const std::string key = item.first.as<std::string>();
    explicit_k = apply_key(c, key, item.second) || explicit_k;
  }
  if (!explicit_k && root["irs"]) c.users = static_cast<int>(c.irs.size());
  c.validate();
}

YAML::Node parse(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(std::string("<document>: ") + e.what());
  }
}

}  // namespace

ScenarioConfig load_scenario_text(std::string_view text) {
  ScenarioConfig c = ScenarioConfig::reference_deployment();
  apply_document(c, parse(text));
  return c;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_scenario_text(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void apply_overrides(ScenarioConfig& config, std::string_view text) {
  ScenarioConfig updated = config;
  apply_document(updated, parse(text));
  config = std::move(updated);
}

void set_parameter(ScenarioConfig& config, std::string_view key, std::string_view value) {
  ScenarioConfig updated = config;
  apply_key(updated, std::string(key), parse(value));
  updated.validate();
  config = std::move(updated);
}

}  // namespace irsloc::tools
