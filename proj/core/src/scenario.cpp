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

#include "irsloc/scenario.hpp"

#include <cmath>
#include <string>

#include "irsloc/errors.hpp"

namespace irsloc {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError(key + ": " + what);
}

std::string index_key(const char* base, int i) { return std::string(base) + "[" + std::to_string(i) + "]"; }

}  // namespace

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts) + 30.0; }

ScenarioConfig ScenarioConfig::reference_deployment() {
  ScenarioConfig c;
  c.irs = {{240, 178, -20}, {333, 68, -20}, {362, -75, -20}, {319, -241, -20}};
  c.users_est = {{224, 168, -40}, {314, 64, -40}, {343, -71, -40}, {303, -229, -40}};
  return c;
}

void ScenarioConfig::validate() const {
  if (users < 1) fail("K", "must be a positive integer");
  if (antennas < 1) fail("N", "must be a positive integer");
  if (elements < 1) fail("M", "must be a positive integer");
  if (static_cast<int>(irs.size()) != users) {
    fail("irs", "has " + std::to_string(irs.size()) + " entries but K = " + std::to_string(users));
  }
  if (static_cast<int>(users_est.size()) != users) {
    fail("users", "has " + std::to_string(users_est.size()) + " entries but K = " +
                      std::to_string(users));
  }
  if (!eta.empty()) {
    if (static_cast<int>(eta.size()) != users) {
      fail("eta", "has " + std::to_string(eta.size()) + " entries but K = " + std::to_string(users));
    }
    double total = 0.0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
      if (!(eta[k] > 0.0) || eta[k] > 1.0) fail(index_key("eta", static_cast<int>(k)), "must lie in (0, 1]");
      total += eta[k];
    }
    if (total > 1.0 + 1e-12) fail("eta", "coefficients sum to more than one");
  }
  if (!std::isfinite(upsilon) || upsilon < 0.0) fail("upsilon", "must be a finite non-negative radius");
  if (!std::isfinite(rho_d_dbm)) fail("rho_d_dbm", "must be finite");
  if (!std::isfinite(c0_db)) fail("c0_db", "must be finite");
  if (!std::isfinite(kappa_b2i)) fail("kappa_b2i", "must be finite");
  if (!std::isfinite(kappa_i2u)) fail("kappa_i2u", "must be finite");
  if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) fail("bandwidth_hz", "must be positive");
  if (!std::isfinite(noise_psd_dbm_hz)) fail("noise_psd_dbm_hz", "must be finite");
  if (rho_cap_dbm && !std::isfinite(*rho_cap_dbm)) fail("rho_cap_dbm", "must be finite");
  if (bs != Position3{}) fail("bs", "the BS must be located at the origin (0, 0, 0)");

  for (int m = 0; m < users; ++m) {
    if (!is_finite(irs[m])) fail(index_key("irs", m), "coordinates must be finite");
    if (irs[m] == bs) fail(index_key("irs", m), "coincides with the BS");
    for (int n = 0; n < m; ++n) {
      if (irs[m] == irs[n]) fail(index_key("irs", m), "coincides with " + index_key("irs", n));
    }
  }
  for (int k = 0; k < users; ++k) {
    if (!is_finite(users_est[k])) fail(index_key("users", k), "coordinates must be finite");
    for (int m = 0; m < users; ++m) {
      if (users_est[k] == irs[m]) fail(index_key("users", k), "coincides with " + index_key("irs", m));
    }
  }
  for (const auto& [m, v] : v_b2i_override) {
    if (m < 0 || m >= users) fail("v_b2i." + std::to_string(m), "IRS index out of range");
  }
  for (const auto& [mk, v] : v_i2u_override) {
    if (mk.first < 0 || mk.first >= users || mk.second < 0 || mk.second >= users) {
      fail("v_i2u." + std::to_string(mk.first) + "." + std::to_string(mk.second),
           "link index out of range");
    }
  }
  if (!assignment.empty()) {
    if (static_cast<int>(assignment.size()) != users) {
      fail("assignment", "has " + std::to_string(assignment.size()) + " entries but K = " +
                             std::to_string(users));
    }
    std::vector<bool> used(users, false);
    for (int k = 0; k < users; ++k) {
      const int m = assignment[k];
      if (m < 0 || m >= users) fail(index_key("assignment", k), "IRS index out of range");
      if (used[m]) fail(index_key("assignment", k), "IRS " + std::to_string(m) + " assigned twice");
      used[m] = true;
    }
  }
}

SystemModel build_model(const ScenarioConfig& config) {
  config.validate();
  const int K = config.users;

  SystemModel model;
  model.antennas = config.antennas;
  model.elements = config.elements;
  model.users = K;
  model.upsilon = config.upsilon;
  model.rho_d = dbm_to_watts(config.rho_d_dbm);
  model.noise = noise_power(config.bandwidth_hz, config.noise_psd_dbm_hz);
  model.eta = config.eta.empty() ? std::vector<double>(K, 1.0 / K) : config.eta;
  model.irs = config.irs;
  model.users_est = config.users_est;

  model.bs_irs.reserve(K);
  model.b2i.reserve(K);
  for (int m = 0; m < K; ++m) {
    model.bs_irs.push_back(bs_irs_angles(config.bs, config.irs[m]));
    const auto it = config.v_b2i_override.find(m);
    const RicianFactor v = it != config.v_b2i_override.end() ? it->second : config.v_b2i;
    model.b2i.push_back({path_loss(norm(config.irs[m] - config.bs), config.c0_db, config.kappa_b2i), v});
  }

  model.i2u = LinkGrid<LinkGeometry>(K, K);
  model.i2u_fading = LinkGrid<FadingParams>(K, K);
  for (int m = 0; m < K; ++m) {
    for (int k = 0; k < K; ++k) {
      const LinkGeometry g = link_geometry(config.irs[m], config.users_est[k]);
      model.i2u(m, k) = g;
      const auto it = config.v_i2u_override.find({m, k});
      const RicianFactor v = it != config.v_i2u_override.end() ? it->second : config.v_i2u;
      model.i2u_fading(m, k) = {path_loss(g.d_hat, config.c0_db, config.kappa_i2u), v};
    }
  }

  model.irs_of_user.resize(K);
  model.user_of_irs.resize(K);
  for (int k = 0; k < K; ++k) {
    const int m = config.assignment.empty() ? k : config.assignment[k];
    model.irs_of_user[k] = m;
    model.user_of_irs[m] = k;
  }
  return model;
}

}  // namespace irsloc
