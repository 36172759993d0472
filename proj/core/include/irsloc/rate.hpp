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

#ifndef IRSLOC_RATE_HPP
#define IRSLOC_RATE_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "irsloc/channel.hpp"
#include "irsloc/scenario.hpp"

namespace irsloc {

/// Desired/leakage/interference decomposition of the hardening rate bound.
///
/// Powers are in watts; c(k, i) is the power received by user k from the beam
/// of user i, and b_k = c(k, k) - a_k.
struct RateBreakdown {
  std::vector<double> a;
  std::vector<double> b;
  Eigen::MatrixXd c;
  double noise = 0.0;
  std::vector<double> rate;  ///< bits/s/Hz

  int users() const noexcept { return static_cast<int>(a.size()); }
  double interference(int k) const;  ///< sum over i != k of c(k, i)
  double sinr(int k) const;

  /// Builds b and the rates from a, c and the noise power.
  static RateBreakdown assemble(std::vector<double> a, Eigen::MatrixXd c, double noise);

  /// Same breakdown with every transmit power multiplied by `power_scale`.
  RateBreakdown scaled(double power_scale) const;
};

/// LOS power gain of a BS -> IRS -> user cascade.
struct CascadedGain {
  double beta = 0.0;
};

CascadedGain beta_cascaded(const FadingParams& b2i, const FadingParams& i2u);

/// Statistical expectations of one user's cascaded LOS terms over the
/// location error. Indices are zero-based (element s here is s + 1 in the
/// usual one-based notation).
class CorrelationTable {
 public:
  CorrelationTable(const SystemModel& model, int user);

  int user() const noexcept { return user_; }
  /// zeta_single for IRS m and element s.
  double zeta_single(int m, int s) const { return single_[m][s]; }
  /// zeta_pair for IRS m as a function of the lag |s - l|.
  double zeta_lag(int m, int lag) const { return lag_[m][lag]; }
  /// sum_s zeta_single(m, s) h_{m,s}.
  std::complex<double> coherent_sum(int m) const { return coherent_[m]; }
  /// sum_{s,l} zeta_pair(m, s, l) h_{m,s} conj(h_{m,l}); real.
  double same_irs_sum(int m) const { return same_[m]; }
  /// sum_{s,l} zeta_cross(m, n, s, l) h_{m,s} conj(h_{n,l}), m != n.
  std::complex<double> cross_irs_sum(int m, int n) const { return cross_(m, n); }

 private:
  int user_;
  std::vector<std::vector<double>> single_;
  std::vector<std::vector<double>> lag_;
  std::vector<std::complex<double>> coherent_;
  std::vector<double> same_;
  Eigen::MatrixXcd cross_;
};

/// Per-watt coefficients: A_k = a_bar_k eta_k rho_d and
/// C_{k,i} = c_bar(k, i) eta_i rho_d.
struct UnitCoefficients {
  std::vector<double> a_bar;
  std::vector<double> b_bar;
  Eigen::MatrixXd c_bar;
};

UnitCoefficients unit_coefficients(const SystemModel& model);

/// Closed-form breakdown for the current power split.
RateBreakdown closed_form_breakdown(const SystemModel& model);

enum class Corollary { orthogonal, perfect_location, large_m, large_n, no_nlos };

const char* to_string(Corollary c) noexcept;

struct CorollaryResult {
  RateBreakdown breakdown;
  /// Structural preconditions of the regime that the model violates.
  std::vector<std::string> warnings;
};

/// Simplified regime formulas, evaluated as printed (dropped terms stay
/// dropped). large_m and large_n ignore the noise, so breakdown.noise is 0.
CorollaryResult rate_corollary(const SystemModel& model, Corollary variant);

/// |sum_s exp(j pi s delta)|^2 with delta the AOD gap, at IRS i, between
/// user k and the user IRS i serves.
double interference_alignment_factor(const LinkGeometry& irs_to_k,
                                     const LinkGeometry& irs_to_served, int elements);

double sum_rate(const RateBreakdown& breakdown) noexcept;

}  // namespace irsloc

#endif  // IRSLOC_RATE_HPP
