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

#include "irsloc/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "irsloc/errors.hpp"

namespace irsloc {

namespace {

class Tableau {
 public:
  // Rows 0..m-1 are constraints, row m is the objective. Last column is the RHS.
  Tableau(int rows, int cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)), basis_(rows) {}

  double& at(int r, int c) { return t_(r, c); }
  double rhs(int r) const { return t_(r, t_.cols() - 1); }
  double& rhs(int r) { return t_(r, t_.cols() - 1); }
  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  int obj() const { return rows(); }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i <= rows(); ++i) {
      if (i != r && t_(i, c) != 0.0) t_.row(i) -= t_(i, c) * t_.row(r);
    }
    basis_[r] = c;
  }

  // Sets the objective row to the reduced costs of `cost` under the current basis.
  void price(const Eigen::VectorXd& cost) {
    t_.row(obj()).setZero();
    t_.row(obj()).head(cost.size()) = cost.transpose();
    for (int r = 0; r < rows(); ++r) {
      const double cb = basis_[r] < cost.size() ? cost[basis_[r]] : 0.0;
      if (cb != 0.0) t_.row(obj()) -= cb * t_.row(r);
    }
  }

  // Runs Bland's rule over the columns in [0, usable). Returns false if unbounded.
  bool optimize(int usable, double tol) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < usable; ++c) {
        if (t_(obj(), c) < -tol) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows(); ++r) {
        if (t_(r, enter) > tol) {
          const double ratio = rhs(r) / t_(r, enter);
          if (ratio < best - tol || (std::abs(ratio - best) <= tol && basis_[r] < basis_[leave])) {
            best = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  double objective_value() const { return -t_(t_.rows() - 1, t_.cols() - 1); }

 private:
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
};

}  // namespace

const char* to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

LpSolution solve_simplex(const InequalityLp& lp, double tol) {
  const int m = static_cast<int>(lp.a.rows());
  const int n = static_cast<int>(lp.a.cols());
  if (lp.b.size() != m || lp.c.size() != n) {
    throw ArgumentError("solve_simplex: inconsistent dimensions");
  }
  if (!lp.a.allFinite() || !lp.b.allFinite() || !lp.c.allFinite()) {
    throw ArgumentError("solve_simplex: non-finite input");
  }

  // Columns: x (n), slacks (m), artificials (one per row with negative b).
  std::vector<int> artificial_row;
  for (int r = 0; r < m; ++r) {
    if (lp.b[r] < 0.0) artificial_row.push_back(r);
  }
  const int n_art = static_cast<int>(artificial_row.size());
  const int first_art = n + m;
  Tableau tab(m, n + m + n_art);

  for (int r = 0, art = 0; r < m; ++r) {
    const double sign = lp.b[r] < 0.0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) tab.at(r, c) = sign * lp.a(r, c);
    tab.at(r, n + r) = sign;
    tab.rhs(r) = sign * lp.b[r];
    if (sign < 0.0) {
      tab.at(r, first_art + art) = 1.0;
      tab.basis()[r] = first_art + art;
      ++art;
    } else {
      tab.basis()[r] = n + r;
    }
  }

  if (n_art > 0) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m + n_art);
    phase1.tail(n_art).setOnes();
    tab.price(phase1);
    tab.optimize(n + m + n_art, tol);
    double scale = 1.0;
    for (int r = 0; r < m; ++r) scale = std::max(scale, std::abs(lp.b[r]));
    if (tab.objective_value() > 1e-9 * scale) return {LpStatus::infeasible, {}, 0.0};
    // Pivot remaining (degenerate) artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] < first_art) continue;
      for (int c = 0; c < first_art; ++c) {
        if (std::abs(tab.at(r, c)) > tol) {
          tab.pivot(r, c);
          break;
        }
      }
    }
  }

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(n + m + n_art);
  cost.head(n) = lp.c;
  tab.price(cost);
  if (!tab.optimize(first_art, tol)) return {LpStatus::unbounded, {}, 0.0};

  LpSolution out;
  out.status = LpStatus::optimal;
  out.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) out.x[tab.basis()[r]] = std::max(0.0, tab.rhs(r));
  }
  out.objective = lp.c.dot(out.x);
  return out;
}

}  // namespace irsloc
