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

#include "mbcert/lp.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

using namespace mbcert;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Best basic feasible solution by trying every column subset. Infinity when none exists.
double brute_force_optimum(const LinearProgram &p) {
    int m = (int)p.constraints.rows();
    int n = (int)p.constraints.cols();
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::vector<int> cols;
        for (int j = 0; j < n; j++) {
            if (pick[j]) {
                cols.push_back(j);
            }
        }
        MatrixXd b(m, m);
        for (int k = 0; k < m; k++) {
            b.col(k) = p.constraints.col(cols[k]);
        }
        Eigen::FullPivLU<MatrixXd> lu(b);
        if (lu.rank() < m) {
            continue;
        }
        VectorXd xb = lu.solve(p.rhs);
        if (xb.minCoeff() < -1e-12) {
            continue;
        }
        double obj = 0;
        for (int k = 0; k < m; k++) {
            obj += p.objective[cols[k]] * xb[k];
        }
        best = std::min(best, obj);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

void expect_certificate(const LinearProgram &p, const LpSolution &s) {
    ASSERT_EQ(s.status, LpStatus::optimal);
    EXPECT_GE(s.primal.minCoeff(), -1e-9);
    EXPECT_LT((p.constraints * s.primal - p.rhs).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_NEAR(p.objective.dot(s.primal), s.objective_value, 1e-9);
    VectorXd reduced = p.objective - p.constraints.transpose() * s.dual;
    EXPECT_GE(reduced.minCoeff(), -1e-8);
    EXPECT_NEAR(p.rhs.dot(s.dual), s.objective_value, 1e-8);
}

}  // namespace

TEST(lp, tiny_known) {
    // min -x1 - 2 x2, x1 + x2 + s = 4, x2 + t = 3.
    LinearProgram p;
    p.objective = VectorXd::Zero(4);
    p.objective << -1, -2, 0, 0;
    p.constraints = MatrixXd::Zero(2, 4);
    p.constraints << 1, 1, 1, 0, 0, 1, 0, 1;
    p.rhs = VectorXd(2);
    p.rhs << 4, 3;
    LpSolution s = solve_lp(p);
    expect_certificate(p, s);
    EXPECT_NEAR(s.objective_value, -7, 1e-12);
    EXPECT_NEAR(s.primal[0], 1, 1e-12);
    EXPECT_NEAR(s.primal[1], 3, 1e-12);
}

TEST(lp, random_against_vertex_enumeration) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 300; trial++) {
        int m = 2 + trial % 3;
        int n = m + 2 + trial % 4;
        LinearProgram p;
        p.constraints = MatrixXd(m, n);
        for (int i = 0; i < m; i++) {
            for (int j = 0; j < n; j++) {
                p.constraints(i, j) = u(rng);
            }
        }
        VectorXd x0(n);
        for (int j = 0; j < n; j++) {
            x0[j] = trial % 5 == 0 && j % 2 ? 0.0 : unit(rng);
        }
        p.rhs = p.constraints * x0;
        p.objective = VectorXd(n);
        for (int j = 0; j < n; j++) {
            p.objective[j] = unit(rng) - (trial % 2 ? 0.0 : 0.3);
        }
        double want = brute_force_optimum(p);
        LpSolution s = solve_lp(p);
        if (s.status == LpStatus::unbounded) {
            // Feasible, so some vertex exists.
            EXPECT_TRUE(std::isfinite(want));
            continue;
        }
        expect_certificate(p, s);
        EXPECT_NEAR(s.objective_value, want, 1e-8) << "trial " << trial;
    }
}

TEST(lp, beale_cycling_example) {
    LinearProgram p;
    p.objective = VectorXd::Zero(7);
    p.objective << 0, 0, 0, -0.75, 150, -0.02, 6;
    p.constraints = MatrixXd(3, 7);
    p.constraints << 1, 0, 0, 0.25, -60, -0.04, 9,  //
        0, 1, 0, 0.5, -90, -0.02, 3,               //
        0, 0, 1, 0, 0, 1, 0;
    p.rhs = VectorXd(3);
    p.rhs << 0, 0, 1;
    LpSolution s = solve_lp(p);
    expect_certificate(p, s);
    EXPECT_NEAR(s.objective_value, -0.05, 1e-12);
    EXPECT_NEAR(brute_force_optimum(p), -0.05, 1e-12);
}

TEST(lp, redundant_rows) {
    LinearProgram p;
    p.objective = VectorXd(3);
    p.objective << 1, 2, 3;
    p.constraints = MatrixXd(3, 3);
    p.constraints << 1, 1, 1, 2, 2, 2, 1, 0, -1;
    p.rhs = VectorXd(3);
    p.rhs << 1, 2, 0;
    LpSolution s = solve_lp(p);
    ASSERT_EQ(s.status, LpStatus::optimal);
    EXPECT_NEAR(s.objective_value, 2, 1e-12);
    EXPECT_LT((p.constraints * s.primal - p.rhs).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(lp, infeasible_and_unbounded) {
    LinearProgram p;
    p.objective = VectorXd::Ones(2);
    p.constraints = MatrixXd::Ones(1, 2);
    p.rhs = VectorXd::Constant(1, -1);
    EXPECT_EQ(solve_lp(p).status, LpStatus::infeasible);

    p.objective << -1, 0;
    p.constraints << 1, -1;
    p.rhs << 0;
    EXPECT_EQ(solve_lp(p).status, LpStatus::unbounded);
    EXPECT_EQ(lp_status_name(LpStatus::unbounded), "unbounded");
}

TEST(lp, shape_errors) {
    LinearProgram p;
    p.objective = VectorXd::Ones(3);
    p.constraints = MatrixXd::Ones(1, 2);
    p.rhs = VectorXd::Ones(1);
    EXPECT_THROW(solve_lp(p), std::invalid_argument);
    p.objective = VectorXd::Ones(2);
    p.rhs[0] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(solve_lp(p), std::invalid_argument);
}

TEST(lp, l1_min) {
    MatrixXd a(1, 2);
    a << 1, 1;
    VectorXd b = VectorXd::Ones(1);
    L1Solution s = l1_min(a, b);
    ASSERT_EQ(s.status, LpStatus::optimal);
    EXPECT_NEAR(s.value, 1, 1e-12);

    a = MatrixXd(2, 2);
    a << 1, 2, 3, 4;
    b = VectorXd::Ones(2);
    s = l1_min(a, b);
    EXPECT_NEAR(s.value, 2, 1e-12);
    EXPECT_NEAR(s.x[0], -1, 1e-12);
    EXPECT_NEAR(s.x[1], 1, 1e-12);

    a = MatrixXd::Zero(1, 2);
    EXPECT_EQ(l1_min(a, b.head(1)).status, LpStatus::infeasible);
}
