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

#ifndef IRSLOC_LINK_GRID_HPP
#define IRSLOC_LINK_GRID_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace irsloc {

/// Dense table indexed by (IRS m, user k), both zero-based.
template <class T>
class LinkGrid {
 public:
  LinkGrid() = default;
  LinkGrid(int irs_count, int user_count, const T& value = T{})
      : irs_(irs_count), users_(user_count),
        cells_(static_cast<std::size_t>(irs_count) * user_count, value) {}

  int irs_count() const noexcept { return irs_; }
  int user_count() const noexcept { return users_; }

  T& operator()(int m, int k) {
    assert(m >= 0 && m < irs_ && k >= 0 && k < users_);
    return cells_[static_cast<std::size_t>(m) * users_ + k];
  }
  const T& operator()(int m, int k) const {
    assert(m >= 0 && m < irs_ && k >= 0 && k < users_);
    return cells_[static_cast<std::size_t>(m) * users_ + k];
  }

 private:
  int irs_ = 0;
  int users_ = 0;
  std::vector<T> cells_;
};

}  // namespace irsloc

#endif  // IRSLOC_LINK_GRID_HPP
