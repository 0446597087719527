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

#ifndef MBCERT_CHANNEL_H
#define MBCERT_CHANNEL_H

#include <array>
#include <vector>

#include "mbcert/bloch.h"

namespace mbcert {

using Mat4 = Eigen::Matrix4d;
using Mat4c = Eigen::Matrix4cd;

/// Real 4x4 matrix acting on (1, m1, m2, m3). Row 0 is always (1, 0, 0, 0).
class PauliTransferMatrix {
   public:
    /// Throws InvalidChannelError if the first row is not (1, 0, 0, 0) within tol.
    static PauliTransferMatrix from_matrix(const Mat4 &t, double tol = kDefaultTol);
    static PauliTransferMatrix identity() {
        return PauliTransferMatrix(Mat4::Identity());
    }
    /// m -> unital * m + translation.
    static PauliTransferMatrix from_unital_and_translation(const Mat3 &unital, const Vec3 &translation);

    const Mat4 &matrix() const {
        return t_;
    }
    Mat3 unital_block() const {
        return t_.block<3, 3>(1, 1);
    }
    Vec3 translation() const {
        return t_.block<3, 1>(1, 0);
    }

   private:
    explicit PauliTransferMatrix(const Mat4 &t) : t_(t) {
    }
    Mat4 t_;
};

/// m'_i = t_i + lam_i m_i.
struct CanonicalChannel {
    std::array<double, 3> t{0, 0, 0};
    std::array<double, 3> lam{1, 1, 1};

    Vec3 t_vec() const {
        return {t[0], t[1], t[2]};
    }
    Vec3 lam_vec() const {
        return {lam[0], lam[1], lam[2]};
    }
    PauliTransferMatrix ptm() const;
};

/// T = U_post o canonical o U_pre.
struct ChannelDecomposition {
    UnitaryAngles pre;
    CanonicalChannel canonical;
    UnitaryAngles post;
};

/// Throws InvalidChannelError if |m'| > 1 + tol (the matrix cannot be CP).
BlochVector apply_channel(const PauliTransferMatrix &t, const BlochVector &m, double tol = kDefaultTol);

/// (I (x) Lambda)(|Omega><Omega|) with |Omega> = |00> + |11>.
Mat4c choi_matrix(const PauliTransferMatrix &t);

/// True iff every Choi eigenvalue is >= -tol.
bool check_cp(const PauliTransferMatrix &t, double tol = kDefaultTol);

/// |t_i| + |lam_i| <= 1 + tol for every i.
bool check_cp_necessary(const CanonicalChannel &c, double tol = kDefaultTol);

/// a o b, i.e. apply b first.
PauliTransferMatrix compose(const PauliTransferMatrix &a, const PauliTransferMatrix &b);

/// Unitary conjugation channel of a rotation.
PauliTransferMatrix unitary_channel(const Rotation3 &r);

/// Throws InvalidChannelError if t is not CP.
ChannelDecomposition canonical_decompose(const PauliTransferMatrix &t);

/// R2 diag(lam) R1 m + R2 t.
PauliTransferMatrix assemble(const ChannelDecomposition &d);

/// lam = (1-p, 1-p, 1-p).
PauliTransferMatrix depolarizing(double p);

/// lam = (1-p, 1-p, 1).
PauliTransferMatrix dephasing(double p);

/// rho -> |0><0| <0|rho|0> + |+><+| <1|rho|1>.
PauliTransferMatrix cq_example();

/// Throws InvalidChannelError if sum K^dag K != I.
PauliTransferMatrix from_kraus(const std::vector<Mat2c> &kraus, double tol = 1e-9);

}  // namespace mbcert

#endif
