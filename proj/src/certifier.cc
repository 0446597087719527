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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace mbcert {

namespace {

Vec3 face_normal(const FaceSigns &s) {
    return {(double)s[0], (double)s[1], (double)s[2]};
}

// v^T R diag(w) R^T u, accumulated in the principal frame.
double frame_form(const Mat3 &r, const Vec3 &w, const Vec3 &v, const Vec3 &u) {
    Vec3 a = r.transpose() * v;
    Vec3 b = r.transpose() * u;
    return (w.array() * a.array() * b.array()).sum();
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

FaceSigns sign_pattern(const Vec3 &m) {
    return {m.x() < 0 ? -1 : 1, m.y() < 0 ? -1 : 1, m.z() < 0 ? -1 : 1};
}

struct AxisFrame {
    int i;
    int a;
    int b;
};

AxisFrame frame_of(Axis axis) {
    int i = (int)axis - 1;
    return {i, (i + 1) % 3, (i + 2) % 3};
}

int sgn(double x) {
    return (x > 0) - (x < 0);
}

int parity_sign(int k) {
    return (k % 2 == 0) ? 1 : -1;
}

bool axis_rotation_face_consistent(const CanonicalChannel &c, Axis axis, double angle, double tol) {
    auto [i, a, b] = frame_of(axis);
    Vec3 l2 = c.lam_vec().array().square();
    double co = std::cos(angle);
    double si = std::sin(angle);
    double s2 = std::sin(2 * angle);
    double ca = c.t[a] * co - c.t[b] * si;
    double cb = c.t[a] * si + c.t[b] * co;
    for (const auto &s : polytope_faces()) {
        double s_i = s[i];
        double sigma = s[a] * s[b];
        double big_a = l2.sum() + sigma * (l2[a] - l2[b]) * s2;
        double w = big_a - l2[i];
        double sc_perp = s[a] * ca + s[b] * cb;
        double sc = s_i * c.t[i] + sc_perp;
        if (sc > 1 + tol) {
            return false;
        }
        double ratio = std::abs(c.t[i] * big_a + s_i * l2[i] * (1 - sc)) / big_a;
        bool ok;
        if (ratio <= 1) {
            ok = big_a <= (1 - sc) * (1 - sc) + tol;
        } else {
            double lo = 1 - s_i * c.t[i];
            double hi = 1 + s_i * c.t[i];
            double far = 2 - sc_perp;
            ok = l2[i] * (w - sc_perp * sc_perp) <= w * lo * lo + tol && l2[i] * (w - far * far) <= w * hi * hi + tol;
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool axis_rotation_literal_sign_rule(const CanonicalChannel &c, Axis axis, double angle, double tol) {
    auto [i, a, b] = frame_of(axis);
    int i1 = i + 1;
    Vec3 l2 = c.lam_vec().array().square();
    double ti = c.t[i];
    double ta = c.t[a];
    double tb = c.t[b];
    double co = std::cos(angle);
    double si = std::sin(angle);
    double s2 = std::sin(2 * angle);
    for (int k = 0; k < 2; k++) {
        for (int kp = 0; kp < 2; kp++) {
            for (int pm : {1, -1}) {
                double ek = parity_sign(k);
                double ekp = parity_sign(kp);
                double big_a = l2.sum() + ekp * (l2[a] - l2[b]) * s2;
                double inner = 1 + parity_sign(k + 1) * ti +
                               pm * parity_sign((i1 - 1) * kp) *
                                   (ta * (co + ekp * si) + ekp * tb * (co + parity_sign(kp + 1) * si));
                double ratio = std::abs(ti + ek * l2[i] * inner) / big_a;
                bool ok;
                if (ratio <= 1) {
                    double lhs = l2.sum() + sgn(ta * co) * sgn(tb * co) * (l2[a] - l2[b]) * s2;
                    double r = 1 + ek * ti + pm * parity_sign(kp + i1 - 1) * (ekp * ta + pm * tb) * co -
                               pm * parity_sign((kp + 1) % 2 + i1 - 1) * (parity_sign(kp + 1) * tb + pm * ta) * si;
                    ok = lhs <= r * r + tol;
                } else {
                    double w = l2[a] + l2[b] + ekp * (l2[a] - l2[b]) * s2;
                    double x = parity_sign((i1 - 1) * kp) * (ta * (co + ekp * si) + tb * (ekp * co - si));
                    double e = parity_sign(((i1 - 1) * kp + k) % 2);
                    double y = 2 - e * ta * (co + ekp * si) + e * tb * (ekp * co - si);
                    ok = l2[i] * (w - x * x) <= w * (1 + ek * ti) * (1 + ek * ti) + tol;
                    for (int kpp = 0; kpp < 2; kpp++) {
                        double f = 1 + parity_sign(kpp) * ti;
                        ok = ok && l2[i] * (w - y * y) <= w * f * f + tol;
                    }
                }
                if (!ok) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

const std::array<FaceSigns, 8> &polytope_faces() {
    static const std::array<FaceSigns, 8> faces{{
        {1, 1, 1},
        {1, 1, -1},
        {1, -1, 1},
        {1, -1, -1},
        {-1, 1, 1},
        {-1, 1, -1},
        {-1, -1, 1},
        {-1, -1, -1},
    }};
    return faces;
}

std::string route_name(Route r) {
    switch (r) {
        case Route::discriminant:
            return "discriminant";
        case Route::support_function:
            return "support_function";
        case Route::monte_carlo:
            return "monte_carlo";
    }
    return "unknown";
}

Ellipsoid ellipsoid_of(const ChannelDecomposition &d) {
    Mat3 r2 = rotation_from_angles(d.post).matrix();
    return {r2 * d.canonical.t_vec(), r2, d.canonical.lam_vec().cwiseAbs()};
}

Ellipsoid ellipsoid_of(const PauliTransferMatrix &t) {
    Eigen::JacobiSVD<Mat3> svd(t.unital_block(), Eigen::ComputeFullU);
    return {t.translation(), svd.matrixU(), svd.singularValues()};
}

Verdict support_check(const Ellipsoid &e, double radius, double tol) {
    Verdict v;
    v.route = Route::support_function;
    v.margin = -std::numeric_limits<double>::infinity();
    for (const auto &s : polytope_faces()) {
        Vec3 n = face_normal(s);
        double h = n.dot(e.center) + e.semi_axes.cwiseProduct(e.axes.transpose() * n).norm() - radius;
        if (h > v.margin) {
            v.margin = h;
            v.worst_face = s;
        }
    }
    v.is_breaking = v.margin <= tol;
    return v;
}

std::array<FaceQuadratic, 8> face_quadratics(const ChannelDecomposition &d, double radius) {
    Vec3 lam = d.canonical.lam_vec();
    if (lam.cwiseAbs().minCoeff() < 1e-12) {
        throw DegenerateEllipsoidError("face quadratics need every |lambda_i| >= 1e-12");
    }
    Mat3 r2 = rotation_from_angles(d.post).matrix();
    Vec3 l2 = lam.array().square();
    Vec3 adj(l2[1] * l2[2], l2[0] * l2[2], l2[0] * l2[1]);
    double det = l2.prod();
    Vec3 c = r2 * d.canonical.t_vec();

    std::array<FaceQuadratic, 8> out;
    for (std::size_t f = 0; f < 8; f++) {
        const FaceSigns &s = polytope_faces()[f];
        double s1 = s[0], s2 = s[1], s3 = s[2];
        // Plane point (x, y, s3 (r - s1 x - s2 y)) minus the center is p0 + x p1 + y p2.
        Vec3 p0(-c[0], -c[1], s3 * radius - c[2]);
        Vec3 p1(1, 0, -s3 * s1);
        Vec3 p2(0, 1, -s3 * s2);
        Vec3 u0 = p2.cross(p0);
        Vec3 u1 = p2.cross(p1);
        FaceQuadratic &q = out[f];
        q.face_signs = s;
        q.alpha = -det * frame_form(r2, l2, u1, u1);
        q.beta = -2 * det * frame_form(r2, l2, u0, u1);
        q.gamma = det * (frame_form(r2, adj, p2, p2) - frame_form(r2, l2, u0, u0));
        q.center_offset = face_normal(s).dot(c) - radius;
    }
    return out;
}

Verdict discriminant_check(std::span<const FaceQuadratic> qs, double tol) {
    Verdict v;
    v.route = Route::discriminant;
    v.margin = -std::numeric_limits<double>::infinity();
    auto signed_root = [](double v) {
        return std::copysign(std::sqrt(std::abs(v)), v);
    };
    for (const auto &q : qs) {
        // Dividing by |alpha| makes f(x) / |alpha| = w^2 - (x - x0)^2, with w the half-width of the
        // face cut projected on m''_1. Scores are then signed lengths.
        double scale = std::abs(q.alpha);
        if (scale == 0) {
            scale = std::max({std::abs(q.beta), std::abs(q.gamma), 1e-300});
        }
        double a = q.alpha / scale;
        double b = q.beta / scale;
        double g = q.gamma / scale;
        double score;
        if (a < 0 && std::abs(b / (2 * a)) <= 1) {
            score = signed_root(b * b - 4 * a * g) / 2;
        } else {
            score = signed_root(std::max(a + b + g, a - b + g));
        }
        if (q.center_offset > tol) {
            score = std::max(score, q.center_offset);
        }
        if (score > v.margin) {
            v.margin = score;
            v.worst_face = q.face_signs;
        }
    }
    v.is_breaking = v.margin <= tol;
    return v;
}

Verdict monte_carlo_check(const PauliTransferMatrix &t,
                          std::size_t n_samples,
                          double tol,
                          std::uint64_t seed,
                          int workers,
                          double radius) {
    workers = std::max(1, workers);
    Mat3 m = t.unital_block();
    Vec3 c = t.translation();
    struct Partial {
        double margin = -std::numeric_limits<double>::infinity();
        FaceSigns face{1, 1, 1};
    };
    std::vector<Partial> partial(workers);
    auto run = [&](int w) {
        std::size_t begin = n_samples * w / workers;
        std::size_t end = n_samples * (w + 1) / workers;
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64((std::uint64_t)w + 1)));
        std::normal_distribution<double> normal;
        Partial &p = partial[w];
        for (std::size_t k = begin; k < end; k++) {
            Vec3 g(normal(rng), normal(rng), normal(rng));
            double n = g.norm();
            if (n == 0) {
                continue;
            }
            Vec3 out = m * (g / n) + c;
            double h = out.cwiseAbs().sum() - radius;
            if (h > p.margin) {
                p.margin = h;
                p.face = sign_pattern(out);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; w++) {
            threads.emplace_back(run, w);
        }
        for (auto &th : threads) {
            th.join();
        }
    }
    Verdict v;
    v.route = Route::monte_carlo;
    v.margin = -std::numeric_limits<double>::infinity();
    for (const auto &p : partial) {
        if (p.margin > v.margin) {
            v.margin = p.margin;
            v.worst_face = p.face;
        }
    }
    v.is_breaking = v.margin <= tol;
    return v;
}

Verdict is_magic_breaking(const PauliTransferMatrix &t, double tol) {
    ChannelDecomposition d = canonical_decompose(t);
    Verdict support = support_check(ellipsoid_of(t), kStabilizerRadius, tol);
    if (d.canonical.lam_vec().cwiseAbs().minCoeff() > 1e-6) {
        auto qs = face_quadratics(d);
        Verdict disc = discriminant_check(qs, tol);
        if (disc.is_breaking != support.is_breaking && std::abs(support.margin) > 1e-6) {
            std::stringstream ss;
            ss << "discriminant and support routes disagree (support margin " << support.margin << ")";
            throw InternalInconsistencyError(ss.str());
        }
    }
    return support;
}

bool is_strictly_mb_sufficient(const CanonicalChannel &c, double tol) {
    double tn = c.t_vec().norm();
    for (double l : c.lam) {
        if (tn + std::abs(l) > kInscribedRadius + tol) {
            return false;
        }
    }
    return true;
}

bool clifford_post_mb(const CanonicalChannel &c, double tol, double radius) {
    double t1 = c.t_vec().lpNorm<1>();
    if (t1 > radius) {
        return false;
    }
    double slack = radius - t1;
    return c.lam_vec().squaredNorm() <= slack * slack + tol;
}

Rotation3 axis_rotation(Axis axis, double angle) {
    auto [i, a, b] = frame_of(axis);
    Mat3 r = Mat3::Identity();
    r(a, a) = std::cos(angle);
    r(b, a) = std::sin(angle);
    r(a, b) = -std::sin(angle);
    r(b, b) = std::cos(angle);
    (void)i;
    return Rotation3::from_matrix(r);
}

UnitaryAngles axis_rotation_angles(Axis axis, double angle) {
    double half_pi = std::numbers::pi / 2;
    switch (axis) {
        case Axis::m1:
            return {angle, 0, 0};
        case Axis::m2:
            return {angle, half_pi, -half_pi};
        case Axis::m3:
            return {0, angle, 0};
    }
    return {};
}

bool axis_rotation_mb(const CanonicalChannel &c, Axis axis, double angle, double tol, AxisRuleVariant form) {
    if (c.lam_vec().cwiseAbs().minCoeff() < 1e-12) {
        ChannelDecomposition d{{}, c, axis_rotation_angles(axis, angle)};
        return support_check(ellipsoid_of(d), kStabilizerRadius, tol).is_breaking;
    }
    if (form == AxisRuleVariant::literal_sign_rule) {
        return axis_rotation_literal_sign_rule(c, axis, angle, tol);
    }
    return axis_rotation_face_consistent(c, axis, angle, tol);
}

Verdict t_distillability_breaking_necessary(const PauliTransferMatrix &t, double tol) {
    if (!check_cp(t)) {
        throw InvalidChannelError("channel is not completely positive");
    }
    return support_check(ellipsoid_of(t), kTPolytopeRadius, tol);
}

EbtCheck ebt_implies_mb_check(const CanonicalChannel &c, double tol) {
    if (c.t_vec().cwiseAbs().maxCoeff() > tol) {
        throw InvalidChannelError("EBT check needs a unital channel (t = 0)");
    }
    return {c.lam_vec().lpNorm<1>() <= 1 + tol, clifford_post_mb(c, tol)};
}

double threshold_bisect(const std::function<PauliTransferMatrix(double)> &family,
                        double lo,
                        double hi,
                        double tol,
                        double radius) {
    if (!(lo < hi) || !(tol > 0)) {
        throw BisectionError("need lo < hi and tol > 0");
    }
    auto breaking = [&](double p) {
        return support_check(ellipsoid_of(family(p)), radius, 0.0).is_breaking;
    };
    constexpr int kScan = 16;
    double a = lo;
    double b = hi;
    bool seen_breaking = false;
    for (int k = 0; k <= kScan; k++) {
        double p = lo + (hi - lo) * k / kScan;
        bool br = breaking(p);
        if (k == 0 && br) {
            throw BisectionError("family is already breaking at the lower end");
        }
        if (seen_breaking && !br) {
            throw BisectionError("family is not monotone on the interval");
        }
        if (br && !seen_breaking) {
            seen_breaking = true;
            b = p;
            a = lo + (hi - lo) * (k - 1) / kScan;
        }
    }
    if (!seen_breaking) {
        throw BisectionError("family is not breaking at the upper end");
    }
    while (b - a > tol) {
        double mid = 0.5 * (a + b);
        if (breaking(mid)) {
            b = mid;
        } else {
            a = mid;
        }
    }
    return b;
}

}  // namespace mbcert
