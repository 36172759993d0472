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

#ifndef IRSLOC_CHANNEL_HPP
#define IRSLOC_CHANNEL_HPP

#include <complex>

#include <Eigen/Core>

namespace irsloc {

class RandomStream;

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Rician K-factor (LOS-to-NLOS power ratio) with an exact pure-LOS value.
class RicianFactor {
 public:
  constexpr RicianFactor() = default;
  /// Throws ArgumentError for negative or NaN values; +inf maps to infinite().
  explicit RicianFactor(double v);

  static constexpr RicianFactor infinite() noexcept {
    RicianFactor r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Linear value; +inf for the pure-LOS sentinel.
  double value() const noexcept;
  /// v / (v + 1), exactly 1 when infinite.
  double los_fraction() const noexcept;
  /// 1 / (v + 1), exactly 0 when infinite.
  double nlos_fraction() const noexcept;

  friend bool operator==(const RicianFactor&, const RicianFactor&) = default;

 private:
  double v_ = 0.0;
  bool infinite_ = false;
};

struct FadingParams {
  double alpha = 1.0;  ///< large-scale power gain, linear
  RicianFactor rician_k;
};

/// BS -> IRS channel, M x N.
struct BsIrsChannel {
  CMatrix entries;
};

/// IRS -> user channel g (the received signal uses g^T), length M.
struct IrsUserChannel {
  CVector entries;
};

/// ULA response with half-wavelength spacing: element n is exp(j pi n theta).
CVector steering_vector(int length, double theta);

/// a(theta1)^T conj(a(theta2)) evaluated through the Dirichlet kernel.
std::complex<double> steering_inner(int length, double theta1, double theta2);

/// C0 (d / 1 m)^(-exponent) as a linear power gain.
double path_loss(double distance, double c0_db, double exponent);

/// Thermal noise power in watts over the given bandwidth.
double noise_power(double bandwidth_hz, double psd_dbm_per_hz);

BsIrsChannel sample_bs_irs(int elements, int antennas, double aoa, double aod,
                           const FadingParams& fading, RandomStream& rng);

IrsUserChannel sample_irs_user(int elements, double true_aod,
                               const FadingParams& fading, RandomStream& rng);

}  // namespace irsloc

#endif  // IRSLOC_CHANNEL_HPP
