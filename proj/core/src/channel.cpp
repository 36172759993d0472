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

#include "irsloc/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "irsloc/errors.hpp"
#include "irsloc/random.hpp"

namespace irsloc {

namespace {

constexpr double kPi = std::numbers::pi;

// |sin(pi delta / 2)| below which the Dirichlet ratio is summed directly.
constexpr double kDirichletSingular = 1e-9;

void require_length(int length, const char* what) {
  if (length < 1) {
    throw ArgumentError(std::string(what) + " must be a positive integer");
  }
}

}  // namespace

RicianFactor::RicianFactor(double v) {
  if (std::isnan(v) || v < 0.0) {
    throw ArgumentError("Rician K-factor must be non-negative");
  }
  if (std::isinf(v)) {
    infinite_ = true;
  } else {
    v_ = v;
  }
}

double RicianFactor::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : v_;
}

double RicianFactor::los_fraction() const noexcept {
  return infinite_ ? 1.0 : v_ / (v_ + 1.0);
}

double RicianFactor::nlos_fraction() const noexcept {
  return infinite_ ? 0.0 : 1.0 / (v_ + 1.0);
}

CVector steering_vector(int length, double theta) {
  require_length(length, "array length");
  CVector a(length);
  for (int n = 0; n < length; ++n) {
    a[n] = std::polar(1.0, kPi * n * theta);
  }
  return a;
}

std::complex<double> steering_inner(int length, double theta1, double theta2) {
  require_length(length, "array length");
  const double delta = theta1 - theta2;
  const double denom = std::sin(kPi * delta / 2.0);
  if (std::abs(denom) < kDirichletSingular) {
    std::complex<double> sum = 0.0;
    for (int n = 0; n < length; ++n) {
      sum += std::polar(1.0, kPi * n * delta);
    }
    return sum;
  }
  const double magnitude = std::sin(length * kPi * delta / 2.0) / denom;
  return std::polar(magnitude, kPi * (length - 1) * delta / 2.0);
}

double path_loss(double distance, double c0_db, double exponent) {
  if (!(distance > 0.0)) {
    throw ArgumentError("path loss requires a positive distance");
  }
  return std::pow(10.0, c0_db / 10.0) * std::pow(distance, -exponent);
}

double noise_power(double bandwidth_hz, double psd_dbm_per_hz) {
  if (!(bandwidth_hz > 0.0)) {
    throw ArgumentError("bandwidth must be positive");
  }
  const double dbm = psd_dbm_per_hz + 10.0 * std::log10(bandwidth_hz);
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

BsIrsChannel sample_bs_irs(int elements, int antennas, double aoa, double aod,
                           const FadingParams& fading, RandomStream& rng) {
  const CVector b = steering_vector(elements, aoa);
  const CVector a = steering_vector(antennas, aod);
  const double los = std::sqrt(fading.alpha * fading.rician_k.los_fraction());
  BsIrsChannel h{los * (b * a.transpose())};
  if (!fading.rician_k.is_infinite()) {
    const double nlos = std::sqrt(fading.alpha * fading.rician_k.nlos_fraction());
    for (int c = 0; c < antennas; ++c) {
      for (int r = 0; r < elements; ++r) {
        h.entries(r, c) += nlos * rng.complex_normal();
      }
    }
  }
  return h;
}

IrsUserChannel sample_irs_user(int elements, double true_aod,
                               const FadingParams& fading, RandomStream& rng) {
  const double los = std::sqrt(fading.alpha * fading.rician_k.los_fraction());
  IrsUserChannel g{los * steering_vector(elements, true_aod)};
  if (!fading.rician_k.is_infinite()) {
    const double nlos = std::sqrt(fading.alpha * fading.rician_k.nlos_fraction());
    for (int s = 0; s < elements; ++s) {
      g.entries[s] += nlos * rng.complex_normal();
    }
  }
  return g;
}

}  // namespace irsloc
