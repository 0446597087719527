// Copyright 2026 The mbcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MBCERT_LP_H
#define MBCERT_LP_H

#include <Eigen/Dense>
#include <string>

namespace mbcert {

/// minimize objective . x  subject to  constraints * x = rhs,  x >= 0.
struct LinearProgram {
    Eigen::VectorXd objective;
    Eigen::MatrixXd constraints;
    Eigen::VectorXd rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string lp_status_name(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double objective_value = 0;
    Eigen::VectorXd primal;
    /// Equality multipliers y with objective - constraints^T y >= 0 at an optimum.
    Eigen::VectorXd dual;
};

constexpr double kPivotTol = 1e-10;
constexpr double kFeasibilityTol = 1e-8;

/// Two-phase dense tableau simplex, Bland's rule throughout. Throws std::invalid_argument on
/// mismatched shapes or non-finite entries.
LpSolution solve_lp(const LinearProgram &p);

struct L1Solution {
    LpStatus status = LpStatus::infeasible;
    double value = 0;
    Eigen::VectorXd x;
};

/// min sum |x_i| subject to a x = b, via x = x+ - x-.
L1Solution l1_min(const Eigen::MatrixXd &a, const Eigen::VectorXd &b);

}  // namespace mbcert

#endif
