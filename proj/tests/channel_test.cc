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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "mbcert/sampling.h"

using namespace mbcert;

namespace {

std::vector<double> choi_spectrum(const PauliTransferMatrix &t) {
    Eigen::SelfAdjointEigenSolver<Mat4c> es(choi_matrix(t));
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    std::sort(v.begin(), v.end());
    return v;
}

double max_diff(const Mat4 &a, const Mat4 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(channel, first_row_validated) {
    Mat4 m = Mat4::Identity();
    m(0, 1) = 0.1;
    EXPECT_THROW(PauliTransferMatrix::from_matrix(m), InvalidChannelError);
    m(0, 1) = 0;
    m(0, 0) = 0.9;
    EXPECT_THROW(PauliTransferMatrix::from_matrix(m), InvalidChannelError);
}

TEST(channel, depolarizing_choi_spectrum) {
    for (double p : {0.0, 0.25, 0.5, 1.0, 4.0 / 3}) {
        double l = 1 - p;
        auto ev = choi_spectrum(depolarizing(p));
        std::vector<double> want{(1 - l) / 2, (1 - l) / 2, (1 - l) / 2, (1 + 3 * l) / 2};
        std::sort(want.begin(), want.end());
        for (int k = 0; k < 4; k++) {
            EXPECT_NEAR(ev[k], want[k], 1e-14) << "p=" << p;
        }
    }
    EXPECT_TRUE(check_cp(depolarizing(4.0 / 3)));
    EXPECT_FALSE(check_cp(depolarizing(4.0 / 3 + 1e-6)));
}

TEST(channel, cp_boundary) {
    // Transpose map: lam = (1, -1, 1) is positive but not CP.
    CanonicalChannel transpose;
    transpose.lam = {1, -1, 1};
    EXPECT_FALSE(check_cp(transpose.ptm()));
    EXPECT_TRUE(check_cp_necessary(transpose));
    CanonicalChannel flip;
    flip.lam = {-1.0 / 3, -1.0 / 3, -1.0 / 3};
    EXPECT_TRUE(check_cp(flip.ptm()));
    CanonicalChannel too_far;
    too_far.t = {0.5, 0, 0};
    too_far.lam = {0.6, 0, 0};
    EXPECT_FALSE(check_cp_necessary(too_far));
    EXPECT_FALSE(check_cp(too_far.ptm()));
}

TEST(channel, cq_example_from_kraus) {
    Mat2c k0 = Mat2c::Zero();
    k0(0, 0) = 1;
    Mat2c k1 = Mat2c::Zero();
    k1(0, 1) = 1 / std::sqrt(2.0);
    k1(1, 1) = 1 / std::sqrt(2.0);
    PauliTransferMatrix t = from_kraus({k0, k1});
    EXPECT_LT(max_diff(t.matrix(), cq_example().matrix()), 1e-15);
    EXPECT_LT((t.translation() - Vec3(0.5, 0, 0.5)).norm(), 1e-15);
    BlochVector out = apply_channel(t, {0, 0, 1});
    EXPECT_NEAR(out.m3, 1, 1e-15);
    out = apply_channel(t, {0, 0, -1});
    EXPECT_NEAR(out.m1, 1, 1e-15);
    EXPECT_THROW(from_kraus({k0}), InvalidChannelError);
}

TEST(channel, apply_rejects_unphysical_output) {
    Mat4 m = Mat4::Identity() * 1.5;
    m(0, 0) = 1;
    PauliTransferMatrix t = PauliTransferMatrix::from_matrix(m);
    EXPECT_THROW(apply_channel(t, {1, 0, 0}), InvalidChannelError);
}

TEST(channel, compose_order) {
    PauliTransferMatrix a = dephasing(1.0);
    PauliTransferMatrix b = cq_example();
    // Apply b first: |1> -> |+> -> maximally mixed.
    BlochVector out = apply_channel(compose(a, b), {0, 0, -1});
    EXPECT_NEAR(out.vec().norm(), 0, 1e-15);
    out = apply_channel(compose(b, a), {0, 0, -1});
    EXPECT_NEAR(out.m1, 1, 1e-15);
}

TEST(channel, decomposition_round_trip) {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 500; k++) {
        PauliTransferMatrix t = random_cp_channel(rng);
        ChannelDecomposition d = canonical_decompose(t);
        EXPECT_LT(max_diff(assemble(d).matrix(), t.matrix()), 1e-10);
        Eigen::JacobiSVD<Mat3> svd(t.unital_block());
        Vec3 abs_lam = d.canonical.lam_vec().cwiseAbs();
        std::vector<double> a(abs_lam.data(), abs_lam.data() + 3);
        std::vector<double> s(svd.singularValues().data(), svd.singularValues().data() + 3);
        std::sort(a.begin(), a.end());
        std::sort(s.begin(), s.end());
        for (int i = 0; i < 3; i++) {
            EXPECT_NEAR(a[i], s[i], 1e-12);
        }
        EXPECT_TRUE(check_cp_necessary(d.canonical, 1e-9));
        EXPECT_TRUE(check_cp(d.canonical.ptm(), 1e-9));
    }
}

TEST(channel, decomposition_of_improper_block) {
    // det < 0 forces a negative lambda.
    CanonicalChannel c;
    c.lam = {0.4, -0.3, 0.2};
    ChannelDecomposition d = canonical_decompose(c.ptm());
    EXPECT_LT(d.canonical.lam[0] * d.canonical.lam[1] * d.canonical.lam[2], 0);
    EXPECT_LT(max_diff(assemble(d).matrix(), c.ptm().matrix()), 1e-12);
}

TEST(channel, decompose_rejects_non_cp) {
    CanonicalChannel transpose;
    transpose.lam = {1, -1, 1};
    EXPECT_THROW(canonical_decompose(transpose.ptm()), InvalidChannelError);
}

TEST(channel, unitary_channel_is_cp) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; k++) {
        Rotation3 r = random_rotation(rng);
        PauliTransferMatrix t = unitary_channel(r);
        EXPECT_TRUE(check_cp(t));
        auto ev = choi_spectrum(t);
        EXPECT_NEAR(ev[3], 2, 1e-12);
        EXPECT_NEAR(ev[2], 0, 1e-12);
    }
}

TEST(channel, dephasing_shape) {
    Mat4 want = Mat4::Identity();
    want(1, 1) = want(2, 2) = 0.25;
    EXPECT_LT(max_diff(dephasing(0.75).matrix(), want), 1e-16);
}
