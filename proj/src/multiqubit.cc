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

#include "mbcert/multiqubit.h"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mbcert/certifier.h"
#include "mbcert/lp.h"
#include "mbcert/sampling.h"

namespace mbcert {

namespace {

int dim_of(int n) {
    return 1 << n;
}

int num_paulis(int n) {
    return 1 << (2 * n);
}

MatrixXcd kron(const MatrixXcd &a, const MatrixXcd &b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void check_size(int n) {
    if (n < 1 || n > kMaxQubits) {
        std::stringstream ss;
        ss << n << " qubits requested; only 1 or 2 are supported";
        throw UnsupportedSizeError(ss.str());
    }
}

const std::vector<MatrixXcd> &pauli_table(int n) {
    static const std::vector<MatrixXcd> one = [] {
        std::vector<MatrixXcd> v;
        for (int i = 0; i < 4; i++) {
            v.push_back(pauli_matrices()[i]);
        }
        return v;
    }();
    static const std::vector<MatrixXcd> two = [] {
        std::vector<MatrixXcd> v;
        for (int i = 0; i < 16; i++) {
            v.push_back(kron(pauli_matrices()[i / 4], pauli_matrices()[i % 4]));
        }
        return v;
    }();
    return n == 1 ? one : two;
}

bool commute(const MatrixXcd &a, const MatrixXcd &b) {
    return (a * b - b * a).cwiseAbs().maxCoeff() < 1e-12;
}

}  // namespace

MatrixXcd pauli_string(int n_qubits, int index) {
    check_size(n_qubits);
    if (index < 0 || index >= num_paulis(n_qubits)) {
        throw std::out_of_range("Pauli string index out of range");
    }
    return pauli_table(n_qubits)[index];
}

PauliCoeffState PauliCoeffState::from_coeffs(int n_qubits, const VectorXd &coeffs, double tol) {
    check_size(n_qubits);
    if (coeffs.size() != num_paulis(n_qubits)) {
        throw InvalidStateError("coefficient vector has the wrong length");
    }
    if (std::abs(coeffs[0] - 1) > tol) {
        throw InvalidStateError("identity coefficient must be 1");
    }
    PauliCoeffState s(n_qubits, coeffs);
    s.c_[0] = 1;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(s.density(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw InvalidStateError("Pauli coefficients do not describe a positive matrix");
    }
    return s;
}

PauliCoeffState PauliCoeffState::from_density(const MatrixXcd &rho, double tol) {
    int d = (int)rho.rows();
    int n = d == 2 ? 1 : d == 4 ? 2 : 0;
    if (n == 0 || rho.cols() != d) {
        throw UnsupportedSizeError("density matrix must be 2x2 or 4x4");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw InvalidStateError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > tol) {
        throw InvalidStateError("density matrix trace is not 1");
    }
    VectorXd c(num_paulis(n));
    for (int p = 0; p < c.size(); p++) {
        c[p] = (pauli_table(n)[p] * rho).trace().real();
    }
    return from_coeffs(n, c, tol);
}

PauliCoeffState PauliCoeffState::from_amplitudes(const std::vector<std::complex<double>> &amps) {
    int n = amps.size() == 2 ? 1 : amps.size() == 4 ? 2 : 0;
    if (n == 0) {
        throw UnsupportedSizeError("amplitude vector must have length 2 or 4");
    }
    Eigen::VectorXcd psi(amps.size());
    for (std::size_t i = 0; i < amps.size(); i++) {
        psi[i] = amps[i];
    }
    double norm = psi.norm();
    if (norm == 0) {
        throw InvalidStateError("amplitude vector is zero");
    }
    psi /= norm;
    return from_density(psi * psi.adjoint());
}

PauliCoeffState PauliCoeffState::from_bloch(const BlochVector &m) {
    if (!m.is_valid()) {
        throw InvalidStateError("Bloch vector has norm > 1");
    }
    return PauliCoeffState(1, Eigen::Vector4d(1, m.m1, m.m2, m.m3));
}

PauliCoeffState PauliCoeffState::product(const PauliCoeffState &a, const PauliCoeffState &b) {
    if (a.n_ != 1 || b.n_ != 1) {
        throw UnsupportedSizeError("product is only defined for two single-qubit states");
    }
    VectorXd c(16);
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            c[i * 4 + j] = a.c_[i] * b.c_[j];
        }
    }
    return PauliCoeffState(2, c);
}

MatrixXcd PauliCoeffState::density() const {
    int d = dim_of(n_);
    MatrixXcd rho = MatrixXcd::Zero(d, d);
    for (int p = 0; p < c_.size(); p++) {
        rho += c_[p] * pauli_table(n_)[p];
    }
    return rho / (double)d;
}

double PauliCoeffState::purity() const {
    return c_.squaredNorm() / dim_of(n_);
}

MatrixXd StabilizerSet::coefficient_matrix() const {
    MatrixXd a(num_paulis(n_qubits), (int)states.size());
    for (std::size_t k = 0; k < states.size(); k++) {
        a.col(k) = states[k].coeffs();
    }
    return a;
}

StabilizerSet enumerate_stabilizers(int n) {
    check_size(n);
    const auto &paulis = pauli_table(n);
    const int np = num_paulis(n);
    const int d = dim_of(n);
    StabilizerSet out;
    out.n_qubits = n;
    std::map<std::vector<long long>, bool> seen;

    auto consider = [&](const MatrixXcd &proj) {
        MatrixXcd rho = proj / (double)d;
        VectorXd c(np);
        for (int p = 0; p < np; p++) {
            c[p] = (paulis[p] * rho).trace().real();
        }
        if (std::abs(c.squaredNorm() / d - 1) > 1e-10) {
            return;
        }
        std::vector<long long> key(np);
        for (int p = 0; p < np; p++) {
            key[p] = std::llround(c[p] * 1e9);
        }
        if (seen.emplace(key, true).second) {
            out.states.push_back(PauliCoeffState::from_coeffs(n, c));
        }
    };

    MatrixXcd id = MatrixXcd::Identity(d, d);
    if (n == 1) {
        for (int g = 1; g < np; g++) {
            for (int s : {1, -1}) {
                consider(id + (double)s * paulis[g]);
            }
        }
    } else {
        for (int g1 = 1; g1 < np; g1++) {
            for (int g2 = g1 + 1; g2 < np; g2++) {
                if (!commute(paulis[g1], paulis[g2])) {
                    continue;
                }
                for (int s1 : {1, -1}) {
                    for (int s2 : {1, -1}) {
                        consider((id + (double)s1 * paulis[g1]) * (id + (double)s2 * paulis[g2]));
                    }
                }
            }
        }
    }
    return out;
}

RomResult rom_decomposition(const PauliCoeffState &state, const StabilizerSet &stabs) {
    if (state.n_qubits() != stabs.n_qubits) {
        throw std::invalid_argument("state and stabilizer set have different qubit counts");
    }
    L1Solution s = l1_min(stabs.coefficient_matrix(), state.coeffs());
    if (s.status != LpStatus::optimal) {
        throw InternalInconsistencyError("robustness LP is " + lp_status_name(s.status) +
                                         "; stabilizer states should span every state");
    }
    RomResult r;
    r.value = s.value;
    r.weights = s.x;
    r.support_size = (int)(s.x.array().abs() > 1e-9).count();
    return r;
}

double rom(const PauliCoeffState &state, const StabilizerSet &stabs) {
    return rom_decomposition(state, stabs).value;
}

bool is_stabilizer_multi(const PauliCoeffState &state, const StabilizerSet &stabs, double tol) {
    return rom(state, stabs) <= 1 + tol;
}

TensorChannel::TensorChannel(std::vector<PauliTransferMatrix> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw std::invalid_argument("tensor channel needs at least one factor");
    }
    check_size((int)factors_.size());
    kron_ = factors_[0].matrix();
    for (std::size_t k = 1; k < factors_.size(); k++) {
        const MatrixXd &a = kron_;
        const Mat4 &b = factors_[k].matrix();
        MatrixXd next(a.rows() * 4, a.cols() * 4);
        for (int i = 0; i < a.rows(); i++) {
            for (int j = 0; j < a.cols(); j++) {
                next.block(i * 4, j * 4, 4, 4) = a(i, j) * b;
            }
        }
        kron_ = next;
    }
}

PauliCoeffState TensorChannel::apply(const PauliCoeffState &state) const {
    if (state.n_qubits() != (int)factors_.size()) {
        throw std::invalid_argument("tensor channel and state have different qubit counts");
    }
    return PauliCoeffState::from_coeffs(state.n_qubits(), kron_ * state.coeffs(), 1e-8);
}

TensorChannel tensor_channel(const std::vector<PauliTransferMatrix> &ts) {
    return TensorChannel(ts);
}

BlochVector partial_trace(const PauliCoeffState &state, int keep) {
    if (state.n_qubits() != 2) {
        throw std::invalid_argument("partial_trace needs a two-qubit state");
    }
    if (keep < 0 || keep > 1) {
        throw std::out_of_range("qubit index must be 0 or 1");
    }
    const VectorXd &c = state.coeffs();
    if (keep == 0) {
        return {c[4], c[8], c[12]};
    }
    return {c[1], c[2], c[3]};
}

NecessityResult theorem4_necessity_check(const PauliTransferMatrix &t1,
                                         const PauliTransferMatrix &t2,
                                         int samples,
                                         std::uint64_t seed) {
    NecessityResult result;
    const StabilizerSet &stabs = [] () -> const StabilizerSet & {
        static const StabilizerSet s = enumerate_stabilizers(2);
        return s;
    }();
    TensorChannel both({t1, t2});
    std::mt19937_64 rng(seed);
    const PauliTransferMatrix *factors[2] = {&t1, &t2};
    PauliCoeffState other = PauliCoeffState::from_bloch({0, 0, 1});

    for (int x = 0; x < 2; x++) {
        const PauliTransferMatrix &t = *factors[x];
        Verdict v = is_magic_breaking(t);
        if (v.is_breaking) {
            continue;
        }
        std::vector<BlochVector> candidates;
        Vec3 s((double)v.worst_face[0], (double)v.worst_face[1], (double)v.worst_face[2]);
        Vec3 dir = t.unital_block().transpose() * s;
        if (dir.norm() > 1e-12) {
            candidates.push_back(BlochVector::from_vec(dir.normalized()));
        }
        for (int k = 0; k < samples; k++) {
            candidates.push_back(random_bloch(rng, true));
        }
        for (const auto &m : candidates) {
            PauliCoeffState mine = PauliCoeffState::from_bloch(m);
            PauliCoeffState in = x == 0 ? PauliCoeffState::product(mine, other) : PauliCoeffState::product(other, mine);
            double r = rom(both.apply(in), stabs);
            if (r > 1 + 1e-7) {
                result.tensor_may_be_mb = false;
                result.witness_factor = x;
                result.witness_rom = r;
                result.witness_input = m;
                return result;
            }
        }
    }
    return result;
}

bool separable_product_mb_check(const PauliTransferMatrix &t1,
                                const PauliTransferMatrix &t2,
                                int trials,
                                std::uint64_t seed) {
    if (!is_magic_breaking(t1).is_breaking || !is_magic_breaking(t2).is_breaking) {
        throw InvalidChannelError("separable_product_mb_check needs two magic-breaking factors");
    }
    static const StabilizerSet stabs = enumerate_stabilizers(2);
    TensorChannel both({t1, t2});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < trials; trial++) {
        int k = terms(rng);
        std::vector<double> w(k);
        double total = 0;
        for (double &x : w) {
            x = unit(rng) + 1e-3;
            total += x;
        }
        VectorXd c = VectorXd::Zero(16);
        for (int j = 0; j < k; j++) {
            PauliCoeffState a = PauliCoeffState::from_bloch(random_bloch(rng, unit(rng) < 0.5));
            PauliCoeffState b = PauliCoeffState::from_bloch(random_bloch(rng, unit(rng) < 0.5));
            c += (w[j] / total) * PauliCoeffState::product(a, b).coeffs();
        }
        PauliCoeffState in = PauliCoeffState::from_coeffs(2, c, 1e-8);
        if (!is_stabilizer_multi(both.apply(in), stabs)) {
            return false;
        }
    }
    return true;
}

}  // namespace mbcert
