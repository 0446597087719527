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

#ifndef MBCERT_CERTIFIER_H
#define MBCERT_CERTIFIER_H

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "mbcert/channel.h"

namespace mbcert {

/// {center + axes * diag(semi_axes) * v : |v| <= 1}.
struct Ellipsoid {
    Vec3 center = Vec3::Zero();
    Mat3 axes = Mat3::Identity();
    Vec3 semi_axes = Vec3::Ones();
};

/// (s1, s2, s3) in {+1, -1}^3; the face s . m = radius.
using FaceSigns = std::array<int, 3>;

/// The 8 faces in the order (+++), (++-), (+-+), (+--), (-++), (-+-), (--+), (---).
const std::array<FaceSigns, 8> &polytope_faces();

/// alpha x^2 + beta x + gamma >= 0 iff the face plane meets the ellipsoid at m''_1 = x.
struct FaceQuadratic {
    FaceSigns face_signs{1, 1, 1};
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    /// s . center - radius. Positive means the center is beyond the face.
    double center_offset = 0;
};

enum class Route { discriminant, support_function, monte_carlo };

std::string route_name(Route r);

struct Verdict {
    bool is_breaking = false;
    /// Max over faces of the route's violation score; negative is strictly inside.
    double margin = 0;
    Route route = Route::support_function;
    FaceSigns worst_face{1, 1, 1};
};

/// Output ellipsoid of a decomposition. The pre-rotation plays no role.
Ellipsoid ellipsoid_of(const ChannelDecomposition &d);

/// Output ellipsoid read directly off the transfer matrix (no angle round trip).
Ellipsoid ellipsoid_of(const PauliTransferMatrix &t);

/// is_breaking iff s . center + |diag(semi_axes) axes^T s| <= radius + tol for all faces.
Verdict support_check(const Ellipsoid &e, double radius = kStabilizerRadius, double tol = kDefaultTol);

/// Throws DegenerateEllipsoidError if some |lam_i| < 1e-12.
std::array<FaceQuadratic, 8> face_quadratics(const ChannelDecomposition &d, double radius = kStabilizerRadius);

/// Per face:
///   alpha < 0 and |beta / (2 alpha)| <= 1  =>  beta^2 - 4 alpha gamma <= 0,
///   otherwise                              =>  alpha +- beta + gamma <= 0.
/// Each left side is divided by |alpha| and mapped through sign(v) sqrt(|v|) (halved for the
/// discriminant), which turns it into a signed length in Bloch units; that length is compared
/// against tol and reported as the margin. A face whose center_offset exceeds tol fails outright.
Verdict discriminant_check(std::span<const FaceQuadratic> qs, double tol = kDefaultTol);

/// Samples n pure inputs uniformly on the sphere. Deterministic in (seed, n, workers).
Verdict monte_carlo_check(const PauliTransferMatrix &t,
                          std::size_t n_samples,
                          double tol = kDefaultTol,
                          std::uint64_t seed = 0,
                          int workers = 1,
                          double radius = kStabilizerRadius);

/// Support route, cross-checked by the discriminant route when min |lam_i| > 1e-6.
/// Throws InvalidChannelError for non-CP input and InternalInconsistencyError if the routes
/// disagree while |margin| > 1e-6.
Verdict is_magic_breaking(const PauliTransferMatrix &t, double tol = kDefaultTol);

/// |t| + |lam_i| <= 1/sqrt(3) + tol for all i.
bool is_strictly_mb_sufficient(const CanonicalChannel &c, double tol = kDefaultTol);

/// sum lam_i^2 <= (radius - sum |t_i|)^2 + tol; false when sum |t_i| > radius.
bool clifford_post_mb(const CanonicalChannel &c, double tol = kDefaultTol, double radius = kStabilizerRadius);

enum class Axis { m1 = 1, m2 = 2, m3 = 3 };

/// How to evaluate the rotation-about-an-axis conditions.
enum class AxisRuleVariant {
    /// Face-consistent signs, full alpha factor in the vertex test.
    face_consistent,
    /// sgn(p) sgn(q) sign rule, vertex test without the leading factor. Reported, not trusted.
    literal_sign_rule,
};

/// Post-rotation by `angle` about `axis`: e_a -> cos e_a + sin e_b for (a, b) the cyclic successors.
Rotation3 axis_rotation(Axis axis, double angle);
UnitaryAngles axis_rotation_angles(Axis axis, double angle);

/// Closed-form conditions for canonical channel followed by an axis rotation.
bool axis_rotation_mb(const CanonicalChannel &c,
                      Axis axis,
                      double angle,
                      double tol = kDefaultTol,
                      AxisRuleVariant form = AxisRuleVariant::face_consistent);

/// Support check against the 3/sqrt(7) octahedron. Necessary only.
Verdict t_distillability_breaking_necessary(const PauliTransferMatrix &t, double tol = kDefaultTol);

struct EbtCheck {
    bool is_ebt_unital = false;
    bool is_mb = false;
};

/// Throws InvalidChannelError when t != 0.
EbtCheck ebt_implies_mb_check(const CanonicalChannel &c, double tol = kDefaultTol);

/// Smallest p in [lo, hi] at which family(p) is breaking (margin <= 0), to within tol.
/// Throws BisectionError when hi is not breaking, lo already is, or a coarse scan finds the
/// verdict switching back.
double threshold_bisect(const std::function<PauliTransferMatrix(double)> &family,
                        double lo,
                        double hi,
                        double tol,
                        double radius = kStabilizerRadius);

/// `uncorrected` keeps four flipped sin2psi / cos2psi signs; only `sign_corrected` is exact.
enum class ClosedFormVariant { uncorrected, sign_corrected };

/// Unital channel, lam then post-rotation U(theta, phi, psi). Returns the 8 face coefficients on
/// the same scale as face_quadratics.
std::array<FaceQuadratic, 8> unital_face_quadratics_closed_form(const Vec3 &lam,
                                                                const UnitaryAngles &post,
                                                                ClosedFormVariant form);

}  // namespace mbcert

#endif
