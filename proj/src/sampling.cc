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

#include "mbcert/sampling.h"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mbcert {

BlochVector random_bloch(std::mt19937_64 &rng, bool pure) {
    std::normal_distribution<double> normal;
    Vec3 g;
    do {
        g = Vec3(normal(rng), normal(rng), normal(rng));
    } while (g.norm() == 0);
    g.normalize();
    if (!pure) {
        std::uniform_real_distribution<double> unit(0, 1);
        g *= std::cbrt(unit(rng));
    }
    return BlochVector::from_vec(g);
}

Rotation3 random_rotation(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Eigen::Vector4d q;
    do {
        q = Eigen::Vector4d(normal(rng), normal(rng), normal(rng), normal(rng));
    } while (q.norm() == 0);
    q.normalize();
    Eigen::Quaterniond quat(q[0], q[1], q[2], q[3]);
    Mat3 r = quat.toRotationMatrix();
    // Re-orthonormalize so the result passes the 1e-9 check regardless of rounding.
    Eigen::JacobiSVD<Mat3> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return Rotation3::from_matrix(svd.matrixU() * svd.matrixV().transpose());
}

UnitaryAngles random_unitary_angles(std::mt19937_64 &rng) {
    return angles_from_rotation(random_rotation(rng));
}

PauliTransferMatrix random_cp_channel(std::mt19937_64 &rng, int rank) {
    if (rank < 1 || rank > 4) {
        throw std::invalid_argument("Kraus rank must be in 1..4");
    }
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd g(2 * rank, 2);
    for (int i = 0; i < g.rows(); i++) {
        for (int j = 0; j < 2; j++) {
            g(i, j) = {normal(rng), normal(rng)};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd v = qr.householderQ() * Eigen::MatrixXcd::Identity(2 * rank, 2);
    std::vector<Mat2c> kraus;
    for (int k = 0; k < rank; k++) {
        kraus.push_back(v.block(2 * k, 0, 2, 2));
    }
    return from_kraus(kraus);
}

PauliTransferMatrix random_cp_channel(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> pick(1, 4);
    return random_cp_channel(rng, pick(rng));
}

}  // namespace mbcert
