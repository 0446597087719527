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

#ifndef MBCERT_MULTIQUBIT_H
#define MBCERT_MULTIQUBIT_H

#include <complex>
#include <cstdint>
#include <vector>

#include "mbcert/channel.h"

namespace mbcert {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kMaxQubits = 2;

/// Pauli string index for n qubits: sum_q p_q 4^(n-1-q) with I, X, Y, Z = 0..3 and qubit 0 the
/// leftmost tensor factor. Two qubits: a * 4 + b.
MatrixXcd pauli_string(int n_qubits, int index);

/// rho = sum_P coeffs[P] P / 2^n with coeffs[0] = 1.
class PauliCoeffState {
   public:
    /// Throws InvalidStateError unless coeffs[0] = 1 and the matrix is PSD to -tol.
    static PauliCoeffState from_coeffs(int n_qubits, const VectorXd &coeffs, double tol = kDefaultTol);
    /// Computational basis amplitudes, renormalized. Throws on a zero vector.
    static PauliCoeffState from_amplitudes(const std::vector<std::complex<double>> &amps);
    static PauliCoeffState from_density(const MatrixXcd &rho, double tol = kDefaultTol);
    static PauliCoeffState from_bloch(const BlochVector &m);
    /// a (x) b.
    static PauliCoeffState product(const PauliCoeffState &a, const PauliCoeffState &b);

    int n_qubits() const {
        return n_;
    }
    const VectorXd &coeffs() const {
        return c_;
    }
    MatrixXcd density() const;
    /// Tr(rho^2) = |coeffs|^2 / 2^n.
    double purity() const;

   private:
    PauliCoeffState(int n, const VectorXd &c) : n_(n), c_(c) {
    }
    int n_;
    VectorXd c_;
};

struct StabilizerSet {
    int n_qubits = 0;
    std::vector<PauliCoeffState> states;

    /// Columns are the states' coefficient vectors.
    MatrixXd coefficient_matrix() const;
};

/// All pure stabilizer states. Throws UnsupportedSizeError unless n is 1 or 2.
StabilizerSet enumerate_stabilizers(int n);

struct RomResult {
    double value = 0;
    VectorXd weights;
    int support_size = 0;
};

/// min sum |x_i| with state = sum x_i S_i. Throws InternalInconsistencyError if the LP fails.
RomResult rom_decomposition(const PauliCoeffState &state, const StabilizerSet &stabs);
double rom(const PauliCoeffState &state, const StabilizerSet &stabs);

/// rom <= 1 + tol.
bool is_stabilizer_multi(const PauliCoeffState &state, const StabilizerSet &stabs, double tol = 1e-7);

/// Lambda_0 (x) Lambda_1 (x) ... acting on Pauli coefficients.
class TensorChannel {
   public:
    explicit TensorChannel(std::vector<PauliTransferMatrix> factors);

    /// Throws std::invalid_argument when the qubit count does not match.
    PauliCoeffState apply(const PauliCoeffState &state) const;
    const MatrixXd &matrix() const {
        return kron_;
    }

   private:
    std::vector<PauliTransferMatrix> factors_;
    MatrixXd kron_;
};

TensorChannel tensor_channel(const std::vector<PauliTransferMatrix> &ts);

/// Marginal of qubit `keep` (0-based) of a two-qubit state. Throws std::out_of_range for a bad
/// index and std::invalid_argument for a non two-qubit state.
BlochVector partial_trace(const PauliCoeffState &state, int keep);

struct NecessityResult {
    /// false once a two-qubit input with non-stabilizer output was found.
    bool tensor_may_be_mb = true;
    /// Factor (0 or 1) whose single-qubit failure produced the witness, or -1.
    int witness_factor = -1;
    double witness_rom = 1;
    BlochVector witness_input;
};

/// If a factor is not magic-breaking, searches product inputs (analytic worst direction first,
/// then `samples` random pure states) for a two-qubit output with rom > 1.
NecessityResult theorem4_necessity_check(const PauliTransferMatrix &t1,
                                         const PauliTransferMatrix &t2,
                                         int samples,
                                         std::uint64_t seed = 0);

/// Random separable inputs sum p_i rho_i (x) sigma_i through t1 (x) t2 must stay stabilizer.
/// Throws InvalidChannelError unless both factors are magic-breaking.
bool separable_product_mb_check(const PauliTransferMatrix &t1,
                                const PauliTransferMatrix &t2,
                                int trials,
                                std::uint64_t seed = 0);

}  // namespace mbcert

#endif
