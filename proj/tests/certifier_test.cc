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

#include "mbcert/certifier.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mbcert/sampling.h"

using namespace mbcert;

namespace {

constexpr double kPi = std::numbers::pi;

ChannelDecomposition fixture_instance() {
    ChannelDecomposition d;
    d.pre = {1.3, -0.2, 2.1};
    d.canonical.t = {0.1, -0.2, 0.05};
    d.canonical.lam = {0.6, -0.4, 0.3};
    d.post = {0.7, 1.1, -0.4};
    return d;
}

}  // namespace

TEST(certifier, face_order) {
    const auto &f = polytope_faces();
    EXPECT_EQ(f[0], (FaceSigns{1, 1, 1}));
    EXPECT_EQ(f[1], (FaceSigns{1, 1, -1}));
    EXPECT_EQ(f[3], (FaceSigns{1, -1, -1}));
    EXPECT_EQ(f[7], (FaceSigns{-1, -1, -1}));
}

TEST(certifier, support_margins_frozen) {
    CanonicalChannel obs;
    obs.lam = {-0.9, -0.3, 0.2};
    Verdict v = support_check(ellipsoid_of(obs.ptm()));
    EXPECT_TRUE(v.is_breaking);
    EXPECT_NEAR(v.margin, -0.030464028516734132, 1e-14);

    v = support_check(ellipsoid_of(depolarizing(0.5)));
    EXPECT_NEAR(v.margin, -0.1339745962155614, 1e-14);

    v = support_check(ellipsoid_of(cq_example()));
    EXPECT_NEAR(v.margin, 0, 1e-15);
    EXPECT_TRUE(v.is_breaking);

    v = support_check(ellipsoid_of(assemble(fixture_instance())));
    EXPECT_FALSE(v.is_breaking);
    EXPECT_NEAR(v.margin, 0.20764431884796952, 1e-13);
}

TEST(certifier, ellipsoid_routes_agree) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 200; k++) {
        PauliTransferMatrix t = random_cp_channel(rng);
        Verdict a = support_check(ellipsoid_of(t));
        Verdict b = support_check(ellipsoid_of(canonical_decompose(t)));
        EXPECT_NEAR(a.margin, b.margin, 1e-10);
    }
}

TEST(certifier, face_cut_range_frozen) {
    // Roots of the (+, +, -) quadratic bound m''_1 on the face cut.
    auto qs = face_quadratics(fixture_instance());
    const FaceQuadratic &q = qs[1];
    EXPECT_EQ(q.face_signs, (FaceSigns{1, 1, -1}));
    ASSERT_LT(q.alpha, 0);
    double disc = q.beta * q.beta - 4 * q.alpha * q.gamma;
    ASSERT_GT(disc, 0);
    double r1 = (-q.beta + std::sqrt(disc)) / (2 * q.alpha);
    double r2 = (-q.beta - std::sqrt(disc)) / (2 * q.alpha);
    EXPECT_NEAR(std::min(r1, r2), 0.34690229455477395, 1e-12);
    EXPECT_NEAR(std::max(r1, r2), 0.66543479625005, 1e-12);
    // (+, +, +) and (+, -, +) miss the ellipsoid entirely.
    for (int k : {0, 2}) {
        EXPECT_LT(qs[k].beta * qs[k].beta - 4 * qs[k].alpha * qs[k].gamma, 0);
    }
    Verdict v = discriminant_check(qs);
    EXPECT_FALSE(v.is_breaking);
    // Widest cut is on (+, -, -).
    EXPECT_EQ(v.worst_face, (FaceSigns{1, -1, -1}));
    EXPECT_NEAR(v.margin, (0.6060921428175778 - 0.25338811299929015) / 2, 1e-12);
}

TEST(certifier, face_quadratics_degenerate) {
    ChannelDecomposition d;
    d.canonical.lam = {0.5, 0, 0.5};
    EXPECT_THROW(face_quadratics(d), DegenerateEllipsoidError);
}

TEST(certifier, flat_ellipsoid_not_misjudged) {
    // Nearly flat but far outside one face.
    ChannelDecomposition d;
    d.canonical.t = {0.64662, -0.208366, 0.0460186};
    d.canonical.lam = {1.94574e-05, 0.266669, 0.37292};
    Verdict s = support_check(ellipsoid_of(d));
    Verdict q = discriminant_check(face_quadratics(d));
    EXPECT_FALSE(s.is_breaking);
    EXPECT_FALSE(q.is_breaking);
}

TEST(certifier, routes_agree_on_random_channels) {
    std::mt19937_64 rng(13);
    int breaking = 0;
    for (int k = 0; k < 300; k++) {
        PauliTransferMatrix t = compose(depolarizing(k % 2 ? 0.5 : 0.0), random_cp_channel(rng));
        ChannelDecomposition d = canonical_decompose(t);
        Verdict s = support_check(ellipsoid_of(t));
        if (std::abs(s.margin) < 1e-4 || d.canonical.lam_vec().cwiseAbs().minCoeff() < 1e-6) {
            continue;
        }
        Verdict q = discriminant_check(face_quadratics(d));
        EXPECT_EQ(s.is_breaking, q.is_breaking);
        EXPECT_EQ(s.is_breaking, is_magic_breaking(t).is_breaking);
        breaking += s.is_breaking;
    }
    EXPECT_GT(breaking, 10);
}

TEST(certifier, monte_carlo) {
    Verdict v = monte_carlo_check(PauliTransferMatrix::identity(), 2000, kDefaultTol, 1);
    EXPECT_FALSE(v.is_breaking);
    EXPECT_EQ(v.route, Route::monte_carlo);
    v = monte_carlo_check(depolarizing(0.5), 2000, kDefaultTol, 1);
    EXPECT_TRUE(v.is_breaking);
    EXPECT_LT(v.margin, -0.13);
    Verdict a = monte_carlo_check(cq_example(), 5000, kDefaultTol, 42, 3);
    Verdict b = monte_carlo_check(cq_example(), 5000, kDefaultTol, 42, 3);
    EXPECT_EQ(a.margin, b.margin);
}

TEST(certifier, is_magic_breaking_basics) {
    EXPECT_FALSE(is_magic_breaking(PauliTransferMatrix::identity()).is_breaking);
    EXPECT_TRUE(is_magic_breaking(depolarizing(0.5)).is_breaking);
    EXPECT_TRUE(is_magic_breaking(dephasing(1.0)).is_breaking);
    EXPECT_FALSE(is_magic_breaking(dephasing(0.999)).is_breaking);
    CanonicalChannel transpose;
    transpose.lam = {1, -1, 1};
    EXPECT_THROW(is_magic_breaking(transpose.ptm()), InvalidChannelError);
}

TEST(certifier, strict_sufficient) {
    CanonicalChannel c;
    c.lam = {0.5, 0.5, 0.5};
    EXPECT_TRUE(is_strictly_mb_sufficient(c));
    c.t = {0.1, 0, 0};
    EXPECT_FALSE(is_strictly_mb_sufficient(c));
    c.lam = {0.4, 0.4, 0.4};
    EXPECT_TRUE(is_strictly_mb_sufficient(c));
}

TEST(certifier, clifford_post_exact_when_unital) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 500; k++) {
        CanonicalChannel c;
        c.lam = {u(rng), u(rng), u(rng)};
        if (std::abs(std::sqrt(c.lam_vec().squaredNorm()) - 1) < 1e-6) {
            continue;
        }
        EXPECT_EQ(clifford_post_mb(c), support_check(ellipsoid_of(c.ptm())).is_breaking);
    }
    CanonicalChannel far;
    far.t = {0.6, 0.5, 0};
    far.lam = {0.1, 0.1, 0.1};
    EXPECT_FALSE(clifford_post_mb(far));
}

TEST(certifier, axis_rotation_frames) {
    double a = 0.3;
    Mat3 r = axis_rotation(Axis::m1, a).matrix();
    EXPECT_NEAR(r(1, 1), std::cos(a), 1e-16);
    EXPECT_NEAR(r(2, 1), std::sin(a), 1e-16);
    EXPECT_NEAR(r(0, 0), 1, 1e-16);
    r = axis_rotation(Axis::m3, a).matrix();
    EXPECT_NEAR(r(1, 0), std::sin(a), 1e-16);
    for (Axis ax : {Axis::m1, Axis::m2, Axis::m3}) {
        for (double th : {0.0, 0.4, 2.0, -1.1}) {
            Mat3 want = axis_rotation(ax, th).matrix();
            Mat3 got = rotation_from_angles(axis_rotation_angles(ax, th)).matrix();
            EXPECT_LT((want - got).cwiseAbs().maxCoeff(), 1e-14);
        }
    }
}

TEST(certifier, axis_rotation_matches_support) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_real_distribution<double> unit(0, 1);
    int checked = 0;
    while (checked < 2000) {
        CanonicalChannel c;
        for (int i = 0; i < 3; i++) {
            c.lam[i] = u(rng);
            c.t[i] = u(rng) * (1 - std::abs(c.lam[i])) * unit(rng);
        }
        Axis ax = static_cast<Axis>(1 + checked % 3);
        double th = 2 * kPi * unit(rng);
        ChannelDecomposition d{{0, 0, 0}, c, axis_rotation_angles(ax, th)};
        Verdict s = support_check(ellipsoid_of(d));
        if (std::abs(s.margin) < 1e-6) {
            continue;
        }
        EXPECT_EQ(axis_rotation_mb(c, ax, th), s.is_breaking);
        checked++;
    }
}

TEST(certifier, t_polytope_necessary) {
    Verdict v = t_distillability_breaking_necessary(depolarizing(0.35));
    EXPECT_TRUE(v.is_breaking);
    EXPECT_FALSE(is_magic_breaking(depolarizing(0.35)).is_breaking);
    EXPECT_FALSE(t_distillability_breaking_necessary(depolarizing(0.34)).is_breaking);
}

TEST(certifier, ebt_check) {
    CanonicalChannel c;
    c.lam = {0.5, -0.3, 0.2};
    EbtCheck e = ebt_implies_mb_check(c);
    EXPECT_TRUE(e.is_ebt_unital);
    EXPECT_TRUE(e.is_mb);
    c.lam = {0.9, 0.9, 0.1};
    e = ebt_implies_mb_check(c);
    EXPECT_FALSE(e.is_ebt_unital);
    c.t = {0.1, 0, 0};
    EXPECT_THROW(ebt_implies_mb_check(c), InvalidChannelError);
}

TEST(certifier, threshold_bisect) {
    double p = threshold_bisect(depolarizing, 0, 1, 1e-9);
    EXPECT_NEAR(p, 1 - 1 / std::sqrt(3.0), 2e-9);
    p = threshold_bisect(dephasing, 0, 1, 1e-9, kTPolytopeRadius);
    EXPECT_NEAR(p, 1 - 1 / std::sqrt(7.0), 2e-9);
    EXPECT_THROW(threshold_bisect(depolarizing, 0.5, 1, 1e-9), BisectionError);
    EXPECT_THROW(threshold_bisect(depolarizing, 0, 0.2, 1e-9), BisectionError);
    EXPECT_THROW(threshold_bisect(depolarizing, 1, 0, 1e-9), BisectionError);
    // Breaking on (0.21, 0.41) and again from 0.74.
    auto non_monotone = [](double p) {
        double q = p < 0.3 ? 2 * p : (p < 0.6 ? 0.6 - (p - 0.3) * 5.0 / 3 : 0.1 + (p - 0.6) * 2.25);
        return depolarizing(q);
    };
    EXPECT_THROW(threshold_bisect(non_monotone, 0, 1, 1e-9), BisectionError);
}
