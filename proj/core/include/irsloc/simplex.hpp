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

#ifndef IRSLOC_SIMPLEX_HPP
#define IRSLOC_SIMPLEX_HPP

#include <Eigen/Core>

namespace irsloc {

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus status) noexcept;

/// minimize c^T x  subject to  A x <= b,  x >= 0.  Entries of b may have any sign.
struct InequalityLp {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense two-phase tableau simplex with Bland's pivoting rule. Intended for
/// small, reasonably scaled problems; `tol` is an absolute pivot tolerance.
LpSolution solve_simplex(const InequalityLp& lp, double tol = 1e-11);

}  // namespace irsloc

#endif  // IRSLOC_SIMPLEX_HPP
