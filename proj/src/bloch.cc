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

#include "mbcert/bloch.h"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mbcert {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Mat3 rz(double a) {
    Mat3 r;
    r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
    return r;
}

Mat3 rx(double a) {
    Mat3 r;
    r << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
    return r;
}

// Wraps into (-pi, pi].
double wrap_angle(double a) {
    double w = std::remainder(a, 2 * std::numbers::pi);
    if (w <= -std::numbers::pi) {
        w += 2 * std::numbers::pi;
    }
    return w;
}

}  // namespace

const std::array<Mat2c, 4> &pauli_matrices() {
    static const std::array<Mat2c, 4> paulis = [] {
        std::array<Mat2c, 4> p;
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, -kI, kI, 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return paulis;
}

DensityMatrix2 DensityMatrix2::from_matrix(const Mat2c &rho, double tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw InvalidStateError("density matrix is not Hermitian");
    }
    std::complex<double> tr = rho.trace();
    if (std::abs(tr - 1.0) > tol) {
        std::stringstream ss;
        ss << "density matrix trace is " << tr.real() << ", expected 1";
        throw InvalidStateError(ss.str());
    }
    Eigen::SelfAdjointEigenSolver<Mat2c> es(rho);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw InvalidStateError("density matrix has a negative eigenvalue");
    }
    return DensityMatrix2(rho);
}

BlochVector bloch_from_density(const DensityMatrix2 &rho) {
    const auto &p = pauli_matrices();
    const Mat2c &r = rho.matrix();
    return {
        (p[1] * r).trace().real(),
        (p[2] * r).trace().real(),
        (p[3] * r).trace().real(),
    };
}

DensityMatrix2 density_from_bloch(const BlochVector &m, double tol) {
    if (!m.is_valid(tol)) {
        std::stringstream ss;
        ss << "Bloch vector has norm " << m.norm() << " > 1";
        throw InvalidStateError(ss.str());
    }
    const auto &p = pauli_matrices();
    Mat2c rho = 0.5 * (p[0] + m.m1 * p[1] + m.m2 * p[2] + m.m3 * p[3]);
    return DensityMatrix2::from_matrix(rho, tol);
}

bool is_stabilizer(const BlochVector &m, double tol) {
    return m.l1_norm() <= kStabilizerRadius + tol;
}

double single_qubit_rom(const BlochVector &m) {
    return std::max(1.0, m.l1_norm());
}

bool in_t_polytope(const BlochVector &m, double tol) {
    return m.l1_norm() <= kTPolytopeRadius + tol;
}

Mat2c unitary_from_angles(const UnitaryAngles &a) {
    double c = std::cos(a.theta / 2);
    double s = std::sin(a.theta / 2);
    double pi = std::numbers::pi;
    Mat2c u;
    u << c * std::exp(kI * (2 * pi - a.phi - a.psi) / 2.0), kI * s * std::exp(-kI * (a.phi - a.psi) / 2.0),
        kI * s * std::exp(kI * (a.phi - a.psi) / 2.0), c * std::exp(-kI * (2 * pi - a.phi - a.psi) / 2.0);
    return u;
}

Rotation3 rotation_from_unitary(const Mat2c &u) {
    if ((u * u.adjoint() - Mat2c::Identity()).cwiseAbs().maxCoeff() > 1e-9) {
        throw InvalidStateError("matrix is not unitary");
    }
    const auto &p = pauli_matrices();
    Mat3 r;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            r(i, j) = 0.5 * (p[i + 1] * u * p[j + 1] * u.adjoint()).trace().real();
        }
    }
    return Rotation3::from_matrix(r);
}

Rotation3 rotation_from_angles(const UnitaryAngles &a) {
    return Rotation3::from_matrix(rz(a.phi) * rx(a.theta) * rz(a.psi));
}

Rotation3 Rotation3::from_matrix(const Mat3 &r, double tol) {
    if ((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) {
        throw InvalidStateError("matrix is not orthogonal");
    }
    if (r.determinant() < 0) {
        throw ImproperRotationError("rotation has determinant -1");
    }
    return Rotation3(r);
}

UnitaryAngles angles_from_rotation(const Rotation3 &rot) {
    const Mat3 &r = rot.matrix();
    UnitaryAngles a;
    a.theta = std::atan2(std::hypot(r(0, 2), r(1, 2)), r(2, 2));
    double sin_theta = std::sin(a.theta);
    if (sin_theta <= 1e-12) {
        a.psi = 0;
        if (r(2, 2) > 0) {
            // R = Rz(phi + psi).
            a.phi = std::atan2(r(1, 0), r(0, 0));
        } else {
            // R = Rz(phi - psi) Rx(pi).
            a.phi = std::atan2(r(1, 0), r(0, 0));
        }
        a.phi = wrap_angle(a.phi);
        return a;
    }

    // Sum and difference of phi/psi from the upper-left block stay accurate near the poles.
    double sum = std::atan2(r(1, 0) - r(0, 1), r(0, 0) + r(1, 1));
    double diff = std::atan2(r(1, 0) + r(0, 1), r(0, 0) - r(1, 1));
    UnitaryAngles best;
    double best_err = std::numeric_limits<double>::infinity();
    for (double shift : {0.0, std::numbers::pi}) {
        UnitaryAngles c{a.theta, wrap_angle((sum + diff) / 2 + shift), wrap_angle((sum - diff) / 2 + shift)};
        double err = (rz(c.phi) * rx(c.theta) * rz(c.psi) - r).cwiseAbs().maxCoeff();
        if (err < best_err) {
            best_err = err;
            best = c;
        }
    }
    return best;
}

}  // namespace mbcert
