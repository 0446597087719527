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

#include <stdexcept>
#include <vector>

namespace mbcert {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Rows 0..m-1 are constraints, last column is the right hand side. The cost row is kept
// separately as reduced costs over every column.
struct Tableau {
    MatrixXd rows;
    VectorXd cost;
    double cost_rhs = 0;
    std::vector<int> basis;

    int num_rows() const {
        return (int)rows.rows();
    }
    int num_cols() const {
        return (int)rows.cols() - 1;
    }

    void pivot(int r, int c) {
        rows.row(r) /= rows(r, c);
        for (int i = 0; i < num_rows(); i++) {
            if (i != r && rows(i, c) != 0) {
                rows.row(i) -= rows(i, c) * rows.row(r);
            }
        }
        double f = cost[c];
        if (f != 0) {
            cost -= f * rows.row(r).head(num_cols()).transpose();
            cost_rhs -= f * rows(r, num_cols());
        }
        basis[r] = c;
    }

    void set_costs(const VectorXd &c) {
        cost = c;
        cost_rhs = 0;
        for (int i = 0; i < num_rows(); i++) {
            double cb = c[basis[i]];
            if (cb != 0) {
                cost -= cb * rows.row(i).head(num_cols()).transpose();
                cost_rhs -= cb * rows(i, num_cols());
            }
        }
    }

    // Returns false when unbounded. Columns >= allowed are never entered.
    bool optimize(int allowed) {
        const int max_iter = 100000;
        for (int iter = 0; iter < max_iter; iter++) {
            int enter = -1;
            for (int j = 0; j < allowed; j++) {
                if (cost[j] < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) {
                return true;
            }
            int leave = -1;
            double best = 0;
            for (int i = 0; i < num_rows(); i++) {
                double a = rows(i, enter);
                if (a <= kPivotTol) {
                    continue;
                }
                double ratio = rows(i, num_cols()) / a;
                if (leave < 0 || ratio < best - 1e-12 || (ratio <= best + 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) {
                return false;
            }
            pivot(leave, enter);
        }
        throw std::logic_error("simplex exceeded its iteration limit");
    }
};

}  // namespace

std::string lp_status_name(LpStatus s) {
    switch (s) {
        case LpStatus::optimal:
            return "optimal";
        case LpStatus::infeasible:
            return "infeasible";
        case LpStatus::unbounded:
            return "unbounded";
    }
    return "unknown";
}

LpSolution solve_lp(const LinearProgram &p) {
    const int m = (int)p.constraints.rows();
    const int n = (int)p.constraints.cols();
    if (p.objective.size() != n || p.rhs.size() != m) {
        throw std::invalid_argument("linear program shapes do not match");
    }
    if (!p.constraints.allFinite() || !p.objective.allFinite() || !p.rhs.allFinite()) {
        throw std::invalid_argument("linear program has non-finite entries");
    }

    MatrixXd a = p.constraints;
    VectorXd b = p.rhs;
    VectorXd row_sign = VectorXd::Ones(m);
    for (int i = 0; i < m; i++) {
        if (b[i] < 0) {
            a.row(i) *= -1;
            b[i] *= -1;
            row_sign[i] = -1;
        }
    }

    Tableau t;
    t.rows = MatrixXd::Zero(m, n + m + 1);
    t.rows.leftCols(n) = a;
    t.rows.block(0, n, m, m).setIdentity();
    t.rows.col(n + m) = b;
    t.basis.resize(m);
    for (int i = 0; i < m; i++) {
        t.basis[i] = n + i;
    }
    std::vector<int> source_row(m);
    for (int i = 0; i < m; i++) {
        source_row[i] = i;
    }

    VectorXd phase1 = VectorXd::Zero(n + m);
    phase1.tail(m).setOnes();
    t.set_costs(phase1);
    t.optimize(n + m);

    LpSolution sol;
    double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
    if (-t.cost_rhs > kFeasibilityTol * scale) {
        sol.status = LpStatus::infeasible;
        return sol;
    }

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (int i = 0; i < t.num_rows();) {
        if (t.basis[i] < n) {
            i++;
            continue;
        }
        int col = -1;
        for (int j = 0; j < n; j++) {
            if (std::abs(t.rows(i, j)) > kPivotTol) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            t.pivot(i, col);
            i++;
        } else {
            int last = t.num_rows() - 1;
            t.rows.row(i).swap(t.rows.row(last));
            std::swap(t.basis[i], t.basis[last]);
            std::swap(source_row[i], source_row[last]);
            t.rows.conservativeResize(last, Eigen::NoChange);
            t.basis.pop_back();
            source_row.pop_back();
        }
    }

    VectorXd phase2 = VectorXd::Zero(n + m);
    phase2.head(n) = p.objective;
    t.set_costs(phase2);
    if (!t.optimize(n)) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.primal = VectorXd::Zero(n);
    for (int i = 0; i < t.num_rows(); i++) {
        sol.primal[t.basis[i]] = std::max(0.0, t.rows(i, t.num_cols()));
    }
    sol.objective_value = p.objective.dot(sol.primal);

    // B^T y = c_B on the surviving rows.
    int k = t.num_rows();
    MatrixXd basis_t(k, k);
    VectorXd cb(k);
    for (int i = 0; i < k; i++) {
        for (int r = 0; r < k; r++) {
            basis_t(i, r) = a(source_row[r], t.basis[i]);
        }
        cb[i] = p.objective[t.basis[i]];
    }
    sol.dual = VectorXd::Zero(m);
    if (k > 0) {
        VectorXd y = basis_t.fullPivLu().solve(cb);
        for (int r = 0; r < k; r++) {
            sol.dual[source_row[r]] = y[r] * row_sign[source_row[r]];
        }
    }
    return sol;
}

L1Solution l1_min(const Eigen::MatrixXd &a, const Eigen::VectorXd &b) {
    const int n = (int)a.cols();
    LinearProgram p;
    p.objective = VectorXd::Ones(2 * n);
    p.constraints.resize(a.rows(), 2 * n);
    p.constraints << a, -a;
    p.rhs = b;
    LpSolution s = solve_lp(p);
    L1Solution out;
    out.status = s.status;
    if (s.status == LpStatus::optimal) {
        out.x = s.primal.head(n) - s.primal.tail(n);
        out.value = out.x.lpNorm<1>();
    }
    return out;
}

}  // namespace mbcert
