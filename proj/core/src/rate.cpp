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

#include "irsloc/rate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "irsloc/errors.hpp"
#include "irsloc/geometry.hpp"

namespace irsloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Split of a cascade's mean power into its LOS/NLOS products. All four are
// finite for any Rician factors, including 0 and the infinite sentinel.
struct CascadeTerms {
  double los_los = 0.0;    // beta
  double los_nlos = 0.0;   // beta / v_i2u
  double nlos_los = 0.0;   // beta / v_b2i
  double nlos_nlos = 0.0;  // beta / (v_b2i v_i2u)
};

CascadeTerms cascade_terms(const FadingParams& b2i, const FadingParams& i2u) {
  const double gain = b2i.alpha * i2u.alpha;
  const double l1 = b2i.rician_k.los_fraction();
  const double n1 = b2i.rician_k.nlos_fraction();
  const double l2 = i2u.rician_k.los_fraction();
  const double n2 = i2u.rician_k.nlos_fraction();
  return {gain * l1 * l2, gain * l1 * n2, gain * n1 * l2, gain * n1 * n2};
}

void require_finite(double value, const std::string& term) {
  if (!std::isfinite(value)) {
    throw NumericalError("non-finite intermediate in " + term);
  }
}

std::string link_name(const char* sym, int k, int i) {
  return std::string(sym) + "[" + std::to_string(k) + "][" + std::to_string(i) + "]";
}

// AOD gap at IRS m between user k and the user that IRS m serves.
double served_gap(const SystemModel& model, int m, int k) {
  return model.i2u(m, k).cos_y - model.i2u(m, model.user_of_irs[m]).cos_y;
}

Eigen::MatrixXcd bs_gram(const SystemModel& model) {
  // gram(m, i) = a(aod_m)^T conj(a(aod of the IRS serving user i)).
  const int K = model.users;
  Eigen::MatrixXcd gram(K, K);
  for (int m = 0; m < K; ++m) {
    for (int i = 0; i < K; ++i) {
      gram(m, i) = steering_inner(model.antennas, model.bs_irs[m].aod,
                                  model.bs_irs[model.irs_of_user[i]].aod);
    }
  }
  return gram;
}

}  // namespace

double RateBreakdown::interference(int k) const {
  double total = 0.0;
  for (int i = 0; i < users(); ++i) {
    if (i != k) total += c(k, i);
  }
  return total;
}

double RateBreakdown::sinr(int k) const {
  return a[k] / (b[k] + interference(k) + noise);
}

RateBreakdown RateBreakdown::assemble(std::vector<double> a, Eigen::MatrixXd c, double noise) {
  const int K = static_cast<int>(a.size());
  if (c.rows() != K || c.cols() != K) {
    throw ArgumentError("rate breakdown: interference matrix must be K x K");
  }
  RateBreakdown out;
  out.a = std::move(a);
  out.c = std::move(c);
  out.noise = noise;
  out.b.resize(K);
  out.rate.resize(K);
  for (int k = 0; k < K; ++k) {
    out.b[k] = out.c(k, k) - out.a[k];
  }
  for (int k = 0; k < K; ++k) {
    out.rate[k] = std::log2(1.0 + out.sinr(k));
  }
  return out;
}

RateBreakdown RateBreakdown::scaled(double power_scale) const {
  std::vector<double> a_scaled(a.size());
  std::transform(a.begin(), a.end(), a_scaled.begin(),
                 [&](double v) { return v * power_scale; });
  return assemble(std::move(a_scaled), c * power_scale, noise);
}

CascadedGain beta_cascaded(const FadingParams& b2i, const FadingParams& i2u) {
  return {cascade_terms(b2i, i2u).los_los};
}

CorrelationTable::CorrelationTable(const SystemModel& model, int user)
    : user_(user),
      single_(model.users),
      lag_(model.users),
      coherent_(model.users),
      same_(model.users),
      cross_(Eigen::MatrixXcd::Zero(model.users, model.users)) {
  const int K = model.users;
  const int M = model.elements;
  const double radius = model.upsilon;

  std::vector<std::vector<std::complex<double>>> h(K, std::vector<std::complex<double>>(M));
  std::vector<std::array<double, 3>> grad(K);
  for (int m = 0; m < K; ++m) {
    const LinkGeometry& geom = model.i2u(m, user);
    grad[m] = geom.error_gradient();
    const double delta = served_gap(model, m, user);
    for (int s = 0; s < M; ++s) h[m][s] = std::polar(1.0, kPi * s * delta);

    const double step = kPi * geom.phi * radius / geom.d_hat;
    single_[m].resize(M);
    lag_[m].resize(M);
    for (int s = 0; s < M; ++s) {
      lag_[m][s] = zeta_kernel(step * s);
      single_[m][s] = lag_[m][s];
    }

    std::complex<double> coherent = 0.0;
    for (int s = 0; s < M; ++s) coherent += single_[m][s] * h[m][s];
    coherent_[m] = coherent;

    // h_s conj(h_l) depends on s - l only, so the double sum folds onto lags.
    double same = M * lag_[m][0];
    for (int d = 1; d < M; ++d) {
      same += 2.0 * (M - d) * lag_[m][d] * std::cos(kPi * d * delta);
    }
    same_[m] = same;
  }

  for (int m = 0; m < K; ++m) {
    for (int n = m + 1; n < K; ++n) {
      std::complex<double> total = 0.0;
      for (int s = 0; s < M; ++s) {
        std::complex<double> row = 0.0;
        for (int l = 0; l < M; ++l) {
          double sq = 0.0;
          for (int c = 0; c < 3; ++c) {
            const double coef = s * grad[m][c] - l * grad[n][c];
            sq += coef * coef;
          }
          row += zeta_kernel(kPi * radius * std::sqrt(sq)) * std::conj(h[n][l]);
        }
        total += h[m][s] * row;
      }
      cross_(m, n) = total;
      cross_(n, m) = std::conj(total);
    }
  }
}

UnitCoefficients unit_coefficients(const SystemModel& model) {
  const int K = model.users;
  const int M = model.elements;
  const int N = model.antennas;
  const Eigen::MatrixXcd gram = bs_gram(model);

  LinkGrid<CascadeTerms> terms(K, K);
  for (int m = 0; m < K; ++m) {
    for (int k = 0; k < K; ++k) terms(m, k) = cascade_terms(model.b2i[m], model.i2u_fading(m, k));
  }

  UnitCoefficients out;
  out.a_bar.resize(K);
  out.b_bar.resize(K);
  out.c_bar.resize(K, K);

  for (int k = 0; k < K; ++k) {
    const CorrelationTable table(model, k);

    std::complex<double> mean = 0.0;
    for (int m = 0; m < K; ++m) {
      mean += std::sqrt(terms(m, k).los_los) * gram(m, k) * table.coherent_sum(m);
    }
    out.a_bar[k] = std::norm(mean) / N;
    require_finite(out.a_bar[k], "A[" + std::to_string(k) + "]");

    for (int i = 0; i < K; ++i) {
      double nlos = 0.0;
      double same = 0.0;
      for (int m = 0; m < K; ++m) {
        const CascadeTerms& t = terms(m, k);
        const double g2 = std::norm(gram(m, i));
        nlos += M * t.los_nlos * g2 + double(M) * N * (t.nlos_nlos + t.nlos_los);
        same += t.los_los * g2 * table.same_irs_sum(m);
      }
      require_finite(nlos, link_name("C_nlos", k, i));
      require_finite(same, link_name("C_same_irs", k, i));

      std::complex<double> cross = 0.0;
      double cross_scale = 0.0;
      for (int m = 0; m < K; ++m) {
        for (int n = 0; n < K; ++n) {
          if (n == m) continue;
          const std::complex<double> term = gram(m, i) * std::conj(gram(n, i)) *
                                            std::sqrt(terms(m, k).los_los * terms(n, k).los_los) *
                                            table.cross_irs_sum(m, n);
          cross += term;
          cross_scale += std::abs(term);
        }
      }
      require_finite(cross.real(), link_name("C_cross_irs", k, i));
      const double scale = nlos + same + cross_scale;
      if (std::abs(cross.imag()) > 1e-9 * scale) {
        throw NumericalError("imaginary residue of " + link_name("C", k, i) + " exceeds 1e-9 relative");
      }
      const double value = (nlos + same + cross.real()) / N;
      if (value < -1e-9 * scale / N) {
        throw NumericalError(link_name("C", k, i) + " is negative beyond rounding");
      }
      out.c_bar(k, i) = value;
    }
    out.b_bar[k] = out.c_bar(k, k) - out.a_bar[k];
  }
  return out;
}

RateBreakdown closed_form_breakdown(const SystemModel& model) {
  const UnitCoefficients unit = unit_coefficients(model);
  const int K = model.users;
  std::vector<double> a(K);
  Eigen::MatrixXd c(K, K);
  for (int k = 0; k < K; ++k) {
    a[k] = unit.a_bar[k] * model.eta[k] * model.rho_d;
    for (int i = 0; i < K; ++i) c(k, i) = unit.c_bar(k, i) * model.eta[i] * model.rho_d;
  }
  return RateBreakdown::assemble(std::move(a), std::move(c), model.noise);
}

const char* to_string(Corollary c) noexcept {
  switch (c) {
    case Corollary::orthogonal: return "orthogonal";
    case Corollary::perfect_location: return "perfect_location";
    case Corollary::large_m: return "large_M";
    case Corollary::large_n: return "large_N";
    case Corollary::no_nlos: return "no_nlos";
  }
  return "unknown";
}

CorollaryResult rate_corollary(const SystemModel& model, Corollary variant) {
  const int K = model.users;
  const double M = model.elements;
  const double N = model.antennas;
  const double rho = model.rho_d;
  const auto& eta = model.eta;

  CorollaryResult result;
  auto& warnings = result.warnings;

  const Eigen::MatrixXcd gram = bs_gram(model);
  double worst_leak = 0.0;
  for (int m = 0; m < K; ++m) {
    for (int i = 0; i < K; ++i) {
      if (m != model.irs_of_user[i]) worst_leak = std::max(worst_leak, std::abs(gram(m, i)));
    }
  }
  if (worst_leak > 1e-6 * N) {
    warnings.push_back("IRS directions are not orthogonal at the BS (max |a_m^T a_i^*| = " +
                       std::to_string(worst_leak) + ")");
  }
  if (variant != Corollary::orthogonal && model.upsilon > 0.0) {
    warnings.push_back("regime assumes perfect location information but upsilon = " +
                       std::to_string(model.upsilon));
  }
  if (variant == Corollary::no_nlos) {
    bool all_los = true;
    for (int m = 0; m < K; ++m) {
      all_los = all_los && model.b2i[m].rician_k.is_infinite();
      for (int k = 0; k < K; ++k) all_los = all_los && model.i2u_fading(m, k).rician_k.is_infinite();
    }
    if (!all_los) warnings.push_back("regime assumes no NLOS paths but a Rician factor is finite");
  }

  auto terms = [&](int m, int k) { return cascade_terms(model.b2i[m], model.i2u_fading(m, k)); };
  // sum_m (beta_mk / (v_b2i v_i2u) + beta_mk / v_b2i)
  auto nlos_sum = [&](int k) {
    double total = 0.0;
    for (int m = 0; m < K; ++m) {
      const CascadeTerms t = terms(m, k);
      total += t.nlos_nlos + t.nlos_los;
    }
    return total;
  };
  auto dirichlet = [&](int i, int k) {
    const int m = model.irs_of_user[i];
    return interference_alignment_factor(model.i2u(m, k), model.i2u(m, i), model.elements);
  };

  std::vector<double> a(K);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(K, K);
  double noise = model.noise;

  for (int k = 0; k < K; ++k) {
    const int tk = model.irs_of_user[k];
    const CascadeTerms own = terms(tk, k);
    switch (variant) {
      case Corollary::orthogonal: {
        const CorrelationTable table(model, k);
        double coherent = 0.0;
        for (int s = 0; s < model.elements; ++s) coherent += table.zeta_single(tk, s);
        a[k] = N * eta[k] * rho * own.los_los * coherent * coherent;
        for (int i = 0; i < K; ++i) {
          if (i == k) continue;
          const int ti = model.irs_of_user[i];
          const CascadeTerms t = terms(ti, k);
          c(k, i) = N * M * eta[i] * rho * t.los_nlos + M * eta[i] * rho * nlos_sum(k) +
                    N * eta[i] * rho * t.los_los * table.same_irs_sum(ti);
        }
        double spread = 0.0;
        for (int s = 0; s < model.elements; ++s) {
          for (int l = 0; l < model.elements; ++l) {
            spread += table.zeta_lag(tk, std::abs(s - l)) -
                      table.zeta_single(tk, s) * table.zeta_single(tk, l);
          }
        }
        const double leak = N * M * eta[k] * rho * own.los_nlos + M * eta[k] * rho * nlos_sum(k) +
                            N * eta[k] * rho * own.los_los * spread;
        c(k, k) = leak + a[k];
        break;
      }
      case Corollary::perfect_location: {
        a[k] = N * M * M * eta[k] * rho * own.los_los;
        for (int i = 0; i < K; ++i) {
          if (i == k) continue;
          const CascadeTerms t = terms(model.irs_of_user[i], k);
          c(k, i) = N * M * eta[i] * rho * t.los_nlos + M * eta[i] * rho * nlos_sum(k) +
                    N * eta[i] * rho * t.los_los * dirichlet(i, k);
        }
        c(k, k) = N * M * eta[k] * rho * own.los_nlos + M * eta[k] * rho * nlos_sum(k) + a[k];
        break;
      }
      case Corollary::large_m: {
        // SINR = N M eta_k beta_kk / (N sum_i eta_i beta_ik / v_ik + sum_m(...)),
        // expressed here with every power multiplied by M rho.
        a[k] = N * M * M * eta[k] * rho * own.los_los;
        for (int i = 0; i < K; ++i) {
          if (i == k) continue;
          c(k, i) = N * M * eta[i] * rho * terms(model.irs_of_user[i], k).los_nlos;
        }
        c(k, k) = N * M * eta[k] * rho * own.los_nlos + M * rho * nlos_sum(k) + a[k];
        noise = 0.0;
        break;
      }
      case Corollary::large_n: {
        // SINR = M^2 eta_k beta_kk / (M sum_i eta_i beta_ik / v_ik
        //        + sum_{i != k} eta_i beta_ik D_M^2), scaled by N rho.
        a[k] = N * M * M * eta[k] * rho * own.los_los;
        for (int i = 0; i < K; ++i) {
          if (i == k) continue;
          const CascadeTerms t = terms(model.irs_of_user[i], k);
          c(k, i) = N * M * eta[i] * rho * t.los_nlos + N * eta[i] * rho * t.los_los * dirichlet(i, k);
        }
        c(k, k) = N * M * eta[k] * rho * own.los_nlos + a[k];
        noise = 0.0;
        break;
      }
      case Corollary::no_nlos: {
        a[k] = N * M * M * eta[k] * rho * own.los_los;
        for (int i = 0; i < K; ++i) {
          if (i == k) continue;
          c(k, i) = N * eta[i] * rho * terms(model.irs_of_user[i], k).los_los * dirichlet(i, k);
        }
        c(k, k) = a[k];
        break;
      }
    }
  }
  result.breakdown = RateBreakdown::assemble(std::move(a), std::move(c), noise);
  return result;
}

double interference_alignment_factor(const LinkGeometry& irs_to_k,
                                     const LinkGeometry& irs_to_served, int elements) {
  return std::norm(steering_inner(elements, irs_to_k.cos_y, irs_to_served.cos_y));
}

double sum_rate(const RateBreakdown& breakdown) noexcept {
  double total = 0.0;
  for (double r : breakdown.rate) total += r;
  return total;
}

}  // namespace irsloc
