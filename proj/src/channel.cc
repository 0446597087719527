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

#include "mbcert/channel.h"

#include <sstream>

namespace mbcert {

PauliTransferMatrix PauliTransferMatrix::from_matrix(const Mat4 &t, double tol) {
    if (!t.allFinite()) {
        throw InvalidChannelError("transfer matrix has non-finite entries");
    }
    Eigen::RowVector4d expected(1, 0, 0, 0);
    if ((t.row(0) - expected).cwiseAbs().maxCoeff() > tol) {
        throw InvalidChannelError("transfer matrix first row must be (1, 0, 0, 0)");
    }
    Mat4 fixed = t;
    fixed.row(0) = expected;
    return PauliTransferMatrix(fixed);
}

PauliTransferMatrix PauliTransferMatrix::from_unital_and_translation(const Mat3 &unital, const Vec3 &translation) {
    Mat4 t = Mat4::Zero();
    t(0, 0) = 1;
    t.block<3, 1>(1, 0) = translation;
    t.block<3, 3>(1, 1) = unital;
    return PauliTransferMatrix(t);
}

PauliTransferMatrix CanonicalChannel::ptm() const {
    return PauliTransferMatrix::from_unital_and_translation(lam_vec().asDiagonal(), t_vec());
}

BlochVector apply_channel(const PauliTransferMatrix &t, const BlochVector &m, double tol) {
    Vec3 out = t.unital_block() * m.vec() + t.translation();
    BlochVector r = BlochVector::from_vec(out);
    if (!r.is_valid(tol)) {
        std::stringstream ss;
        ss << "output Bloch vector has norm " << r.norm() << "; the transfer matrix is not CP";
        throw InvalidChannelError(ss.str());
    }
    return r;
}

Mat4c choi_matrix(const PauliTransferMatrix &t) {
    const auto &p = pauli_matrices();
    const Mat4 &m = t.matrix();
    Mat4c choi = Mat4c::Zero();
    for (int k = 0; k < 4; k++) {
        Mat2c image = Mat2c::Zero();
        for (int l = 0; l < 4; l++) {
            image += m(l, k) * p[l];
        }
        Mat2c pk = p[k].transpose();
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                choi.block<2, 2>(2 * a, 2 * b) += 0.5 * pk(a, b) * image;
            }
        }
    }
    return choi;
}

bool check_cp(const PauliTransferMatrix &t, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat4c> es(choi_matrix(t), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

bool check_cp_necessary(const CanonicalChannel &c, double tol) {
    for (int i = 0; i < 3; i++) {
        if (std::abs(c.t[i]) + std::abs(c.lam[i]) > 1 + tol) {
            return false;
        }
    }
    return true;
}

PauliTransferMatrix compose(const PauliTransferMatrix &a, const PauliTransferMatrix &b) {
    Mat4 m = a.matrix() * b.matrix();
    return PauliTransferMatrix::from_unital_and_translation(m.block<3, 3>(1, 1), m.block<3, 1>(1, 0));
}

PauliTransferMatrix unitary_channel(const Rotation3 &r) {
    return PauliTransferMatrix::from_unital_and_translation(r.matrix(), Vec3::Zero());
}

ChannelDecomposition canonical_decompose(const PauliTransferMatrix &t) {
    if (!check_cp(t)) {
        throw InvalidChannelError("channel is not completely positive");
    }
    Eigen::JacobiSVD<Mat3> svd(t.unital_block(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 u = svd.matrixU();
    Mat3 v = svd.matrixV();
    Vec3 lam = svd.singularValues();

    // Fix the per-column sign gauge so repeated calls on nearby inputs agree.
    for (int k = 0; k < 3; k++) {
        Eigen::Index pivot;
        v.col(k).cwiseAbs().maxCoeff(&pivot);
        if (v(pivot, k) < 0) {
            u.col(k) *= -1;
            v.col(k) *= -1;
        }
    }
    if (u.determinant() < 0) {
        u.col(2) *= -1;
        lam[2] *= -1;
    }
    if (v.determinant() < 0) {
        v.col(2) *= -1;
        lam[2] *= -1;
    }

    Rotation3 r2 = Rotation3::from_matrix(u, 1e-8);
    Rotation3 r1 = Rotation3::from_matrix(v.transpose(), 1e-8);
    Vec3 tv = u.transpose() * t.translation();

    ChannelDecomposition d;
    d.pre = angles_from_rotation(r1);
    d.post = angles_from_rotation(r2);
    d.canonical.t = {tv[0], tv[1], tv[2]};
    d.canonical.lam = {lam[0], lam[1], lam[2]};
    return d;
}

PauliTransferMatrix assemble(const ChannelDecomposition &d) {
    Mat3 r1 = rotation_from_angles(d.pre).matrix();
    Mat3 r2 = rotation_from_angles(d.post).matrix();
    Mat3 unital = r2 * d.canonical.lam_vec().asDiagonal() * r1;
    return PauliTransferMatrix::from_unital_and_translation(unital, r2 * d.canonical.t_vec());
}

PauliTransferMatrix depolarizing(double p) {
    return PauliTransferMatrix::from_unital_and_translation(Mat3::Identity() * (1 - p), Vec3::Zero());
}

PauliTransferMatrix dephasing(double p) {
    return PauliTransferMatrix::from_unital_and_translation(Vec3(1 - p, 1 - p, 1).asDiagonal(), Vec3::Zero());
}

PauliTransferMatrix cq_example() {
    Mat3 unital;
    unital << 0, 0, -0.5, 0, 0, 0, 0, 0, 0.5;
    return PauliTransferMatrix::from_unital_and_translation(unital, Vec3(0.5, 0, 0.5));
}

PauliTransferMatrix from_kraus(const std::vector<Mat2c> &kraus, double tol) {
    Mat2c sum = Mat2c::Zero();
    for (const auto &k : kraus) {
        sum += k.adjoint() * k;
    }
    if ((sum - Mat2c::Identity()).cwiseAbs().maxCoeff() > tol) {
        throw InvalidChannelError("Kraus operators are not trace preserving");
    }
    const auto &p = pauli_matrices();
    Mat4 t;
    for (int kk = 0; kk < 4; kk++) {
        Mat2c image = Mat2c::Zero();
        for (const auto &k : kraus) {
            image += k * p[kk] * k.adjoint();
        }
        for (int l = 0; l < 4; l++) {
            t(l, kk) = 0.5 * (p[l] * image).trace().real();
        }
    }
    return PauliTransferMatrix::from_matrix(t, tol);
}

}  // namespace mbcert
