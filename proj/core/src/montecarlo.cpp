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

#include "irsloc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <complex>
#include <numbers>
#include <thread>
#include <vector>

#include "irsloc/beamforming.hpp"
#include "irsloc/channel.hpp"
#include "irsloc/errors.hpp"
#include "irsloc/random.hpp"

namespace irsloc {

namespace {

constexpr std::uint64_t kTagLocation = 0x4c4f43;  // "LOC"
constexpr std::uint64_t kTagB2i = 0x423249;       // "B2I"
constexpr std::uint64_t kTagI2u = 0x493255;       // "I2U"
constexpr std::uint64_t kTagZeta = 0x5a4554;      // "ZET"

// Sums accumulated over the fading draws of one location draw.
struct Partial {
  Eigen::MatrixXcd sum_y;   // (k, i) -> sum of g_k^T w_i
  Eigen::MatrixXd sum_y2;   // (k, i) -> sum of |g_k^T w_i|^2

  Partial& operator+=(const Partial& o) {
    sum_y += o.sum_y;
    sum_y2 += o.sum_y2;
    return *this;
  }
};

// Pairwise reduction in index order; the result only depends on the inputs.
Partial reduce(std::vector<Partial>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  Partial left = reduce(parts, lo, mid);
  left += reduce(parts, mid, hi);
  return left;
}

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int t = 0; t < count; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (int t = next++; t < count && !failed; t = next++) {
      try {
        fn(t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Partial location_draw(const SystemModel& model, const McConfig& cfg, int t,
                      const std::vector<CVector>& beams, const std::vector<CVector>& phases) {
  const int K = model.users;
  const int M = model.elements;
  const int N = model.antennas;

  LinkGrid<double> true_aod(K, K);
  for (int k = 0; k < K; ++k) {
    RandomStream rng(cfg.seed, stream_id({kTagLocation, std::uint64_t(t), std::uint64_t(k)}));
    const LocationError err = sample_location_error(model.upsilon, rng);
    const Position3 actual = model.users_est[k] + Position3{err.dx, err.dy, err.dz};
    for (int m = 0; m < K; ++m) {
      true_aod(m, k) = cfg.mode == ErrorMode::linearized
                           ? model.i2u(m, k).cos_y + angle_error(model.i2u(m, k), err)
                           : irs_user_aod(model.irs[m], actual);
    }
  }

  Partial part{Eigen::MatrixXcd::Zero(K, K), Eigen::MatrixXd::Zero(K, K)};
  std::vector<BsIrsChannel> bs_irs(K);
  LinkGrid<IrsUserChannel> irs_user(K, K);
  for (int f = 0; f < cfg.n_fading_draws; ++f) {
    for (int m = 0; m < K; ++m) {
      RandomStream rng(cfg.seed,
                       stream_id({kTagB2i, std::uint64_t(t), std::uint64_t(f), std::uint64_t(m)}));
      bs_irs[m] = sample_bs_irs(M, N, model.bs_irs[m].aoa, model.bs_irs[m].aod, model.b2i[m], rng);
      for (int k = 0; k < K; ++k) {
        RandomStream link(cfg.seed, stream_id({kTagI2u, std::uint64_t(t), std::uint64_t(f),
                                               std::uint64_t(m), std::uint64_t(k)}));
        irs_user(m, k) = sample_irs_user(M, true_aod(m, k), model.i2u_fading(m, k), link);
      }
    }
    const std::vector<CVector> g = effective_channel(bs_irs, irs_user, phases);
    for (int k = 0; k < K; ++k) {
      for (int i = 0; i < K; ++i) {
        const std::complex<double> y = g[k].transpose() * beams[i];
        part.sum_y(k, i) += y;
        part.sum_y2(k, i) += std::norm(y);
      }
    }
  }
  return part;
}

std::complex<double> zeta_sample(double phase_m, double phase_n) {
  return std::polar(1.0, std::numbers::pi * (phase_m - phase_n));
}

}  // namespace

const char* to_string(ErrorMode mode) noexcept {
  return mode == ErrorMode::linearized ? "linearized" : "exact";
}

void McConfig::validate() const {
  if (n_location_draws < 1) throw ArgumentError("n_location_draws must be >= 1");
  if (n_fading_draws < 1) throw ArgumentError("n_fading_draws must be >= 1");
  if (threads < 0) throw ArgumentError("threads must be >= 0");
}

RateBreakdown mc_breakdown(const SystemModel& model, const McConfig& cfg) {
  cfg.validate();
  const int K = model.users;

  std::vector<double> served_aods(K);
  for (int k = 0; k < K; ++k) served_aods[k] = model.bs_irs[model.irs_of_user[k]].aod;
  const std::vector<CVector> beams = transmit_beams(model.power_split(), served_aods, model.antennas);

  std::vector<CVector> phases(K);
  for (int m = 0; m < K; ++m) {
    phases[m] = phase_shift_beam(model.i2u(m, model.user_of_irs[m]).cos_y, model.bs_irs[m].aoa,
                                 model.elements);
  }

  std::vector<Partial> parts(cfg.n_location_draws);
  parallel_for(cfg.n_location_draws, cfg.threads,
               [&](int t) { parts[t] = location_draw(model, cfg, t, beams, phases); });
  const Partial total = reduce(parts, 0, parts.size());

  const double draws = double(cfg.n_location_draws) * cfg.n_fading_draws;
  std::vector<double> a(K);
  Eigen::MatrixXd c = total.sum_y2 / draws;
  for (int k = 0; k < K; ++k) a[k] = std::norm(total.sum_y(k, k) / draws);
  return RateBreakdown::assemble(std::move(a), std::move(c), model.noise);
}

RateBreakdown mc_breakdown(const ScenarioConfig& scenario, const McConfig& cfg) {
  return mc_breakdown(build_model(scenario), cfg);
}

ZetaEstimate mc_zeta(const LinkGeometry& geom, double radius, int s, int l, int n,
                     std::uint64_t seed) {
  return mc_zeta(geom, geom, radius, s, l, n, seed);
}

ZetaEstimate mc_zeta(const LinkGeometry& geom_m, const LinkGeometry& geom_n, double radius,
                     int s, int l, int n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("mc_zeta: n must be >= 1");
  if (s < 1 || l < 1) throw ArgumentError("mc_zeta: element indices start at 1");
  RandomStream rng(seed, stream_id({kTagZeta}));
  std::complex<double> sum = 0.0;
  for (int t = 0; t < n; ++t) {
    const LocationError err = sample_location_error(radius, rng);
    sum += zeta_sample((s - 1) * angle_error(geom_m, err), (l - 1) * angle_error(geom_n, err));
  }
  return {sum.real() / n, sum.imag() / n, n};
}

}  // namespace irsloc
