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

#ifndef IRSLOC_RANDOM_HPP
#define IRSLOC_RANDOM_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace irsloc {

/// Philox4x32-10 block function.
///
/// Stateless: maps a 128-bit counter and a 64-bit key to 128 random bits.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key) noexcept;
};

/// Mixes an ordered tuple of integers into a 64-bit stream identifier.
std::uint64_t stream_id(std::initializer_list<std::uint64_t> parts) noexcept;

/// A reproducible random stream addressed by (seed, stream).
///
/// Two streams with the same address produce identical sequences no matter
/// which thread creates them or in what order, which is what makes sampled
/// results independent of the evaluation schedule.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; both outputs of each pair are used.
  double normal() noexcept;

  /// Circularly symmetric CN(0, 1): real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal() noexcept;

 private:
  std::uint32_t next_word() noexcept;

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace irsloc

#endif  // IRSLOC_RANDOM_HPP
