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

#ifndef MBCERT_BLOCH_H
#define MBCERT_BLOCH_H

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "mbcert/errors.h"

namespace mbcert {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;

/// Default slack for every membership inequality.
constexpr double kDefaultTol = 1e-9;

/// Radius (in the l1 sense) of the stabilizer octahedron |m1|+|m2|+|m3| <= 1.
constexpr double kStabilizerRadius = 1.0;

/// 3/sqrt(7): outside the octahedron of this radius single-qubit states are T-distillable.
constexpr double kTPolytopeRadius = 1.1338934190276817;

/// 1/sqrt(3): radius of the largest ball inscribed in the stabilizer octahedron.
constexpr double kInscribedRadius = 0.57735026918962576;

/// Pauli matrices I, X, Y, Z.
const std::array<Mat2c, 4> &pauli_matrices();

/// Pauli expectation triple (m1, m2, m3) = (<X>, <Y>, <Z>) of a qubit state.
struct BlochVector {
    double m1 = 0;
    double m2 = 0;
    double m3 = 0;

    static BlochVector from_vec(const Vec3 &v) {
        return {v.x(), v.y(), v.z()};
    }
    Vec3 vec() const {
        return {m1, m2, m3};
    }
    double norm() const {
        return vec().norm();
    }
    double l1_norm() const {
        return std::abs(m1) + std::abs(m2) + std::abs(m3);
    }
    bool is_valid(double tol = kDefaultTol) const {
        return m1 * m1 + m2 * m2 + m3 * m3 <= 1 + tol;
    }
    bool operator==(const BlochVector &) const = default;
};

/// A validated qubit density matrix: Hermitian, unit trace, eigenvalues >= -tol.
class DensityMatrix2 {
   public:
    /// Throws InvalidStateError when the matrix is not a valid state.
    static DensityMatrix2 from_matrix(const Mat2c &rho, double tol = kDefaultTol);

    const Mat2c &matrix() const {
        return rho_;
    }

   private:
    explicit DensityMatrix2(const Mat2c &rho) : rho_(rho) {
    }
    Mat2c rho_;
};

/// Euler angles of the 2x2 unitary
///   U = -Rz(phi) Rx(theta) Rz(psi),
/// i.e. the matrix with entries cos(theta/2) e^{i(2pi-phi-psi)/2}, i sin(theta/2) e^{-i(phi-psi)/2}, ...
struct UnitaryAngles {
    double theta = 0;
    double phi = 0;
    double psi = 0;
};

/// A proper rotation of R^3 (orthogonal, det = +1).
class Rotation3 {
   public:
    /// Throws InvalidStateError if not orthogonal, ImproperRotationError if det = -1.
    static Rotation3 from_matrix(const Mat3 &r, double tol = 1e-9);
    static Rotation3 identity() {
        return Rotation3(Mat3::Identity());
    }

    const Mat3 &matrix() const {
        return r_;
    }
    Vec3 apply(const Vec3 &v) const {
        return r_ * v;
    }
    Rotation3 operator*(const Rotation3 &other) const {
        return Rotation3(r_ * other.r_);
    }
    Rotation3 inverse() const {
        return Rotation3(r_.transpose());
    }

   private:
    explicit Rotation3(const Mat3 &r) : r_(r) {
    }
    Mat3 r_;
};

/// m_i = Tr(sigma_i rho).
BlochVector bloch_from_density(const DensityMatrix2 &rho);

/// rho = (I + sum m_i sigma_i) / 2. Throws InvalidStateError when |m| > 1 + tol.
DensityMatrix2 density_from_bloch(const BlochVector &m, double tol = kDefaultTol);

/// |m1| + |m2| + |m3| <= 1 + tol.
bool is_stabilizer(const BlochVector &m, double tol = kDefaultTol);

/// Single-qubit robustness of magic, max{1, |m1|+|m2|+|m3|}.
double single_qubit_rom(const BlochVector &m);

/// |m1| + |m2| + |m3| <= 3/sqrt(7) + tol.
bool in_t_polytope(const BlochVector &m, double tol = kDefaultTol);

Mat2c unitary_from_angles(const UnitaryAngles &a);

/// R_ij = Tr(sigma_i U sigma_j U^dagger) / 2, so that R m = bloch(U rho(m) U^dagger).
/// Throws InvalidStateError for a non-unitary input.
Rotation3 rotation_from_unitary(const Mat2c &u);

/// Inverse of the Euler parametrization. Returns theta in [0, pi], phi and psi in (-pi, pi];
/// at theta in {0, pi} the representative with psi = 0 is returned.
UnitaryAngles angles_from_rotation(const Rotation3 &r);

/// Shorthand for rotation_from_unitary(unitary_from_angles(a)), computed in closed form.
Rotation3 rotation_from_angles(const UnitaryAngles &a);

}  // namespace mbcert

#endif
