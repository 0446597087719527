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

#include <cmath>

#include "mbcert/certifier.h"

namespace mbcert {

// Coefficients for a unital channel followed by U(theta, phi, psi), written in the
// (l1, l2, l3) = (lam1^2, lam2^2, lam3^2) variables. Faces 5..8 follow from faces 4..1 by
// alpha_k = alpha_{9-k}, beta_k = -beta_{9-k}; gamma takes two values.
//
// The alpha expressions below omit the common factor; the true one is -prod(l) alpha / 4. beta
// and gamma are 4x the true values. `uncorrected` flips four signs (alpha2 sin2psi, alpha3
// cos2psi, beta2 sin2psi, beta4 sin2psi) that `sign_corrected` gets right.
std::array<FaceQuadratic, 8> unital_face_quadratics_closed_form(const Vec3 &lam,
                                                                const UnitaryAngles &post,
                                                                ClosedFormVariant form) {
    double l1 = lam[0] * lam[0];
    double l2 = lam[1] * lam[1];
    double l3 = lam[2] * lam[2];
    double th = post.theta;
    double ph = post.phi;
    double ps = post.psi;
    double fix = form == ClosedFormVariant::sign_corrected ? -1.0 : 1.0;

    double sth = std::sin(th), cth = std::cos(th);
    double sph = std::sin(ph), cph = std::cos(ph);
    double sps = std::sin(ps), cps = std::cos(ps);
    double s2th = std::sin(2 * th), c2th = std::cos(2 * th);
    double s2ph = std::sin(2 * ph), c2ph = std::cos(2 * ph);
    double s2ps = std::sin(2 * ps), c2ps = std::cos(2 * ps);
    double sum = l1 + l2 + l3;
    double aniso = l1 + l2 - 2 * l3;
    double diff = l1 - l2;
    double prod = l1 * l2 * l3;

    double a1 = 4 * sum + 4 * sth * aniso * (sth * sph * cph + cth * (cph - sph)) -
                diff * c2ps * (2 * s2th * (cph - sph) - (3 + c2th) * s2ph) +
                4 * diff * s2ps * (sph + cph) * (sth + cth * (cph - sph));
    double a2 = 4 * sum + 4 * sth * aniso * (sth * sph * cph - cth * (cph - sph)) +
                diff * c2ps * (2 * s2th * (cph - sph) + (3 + c2th) * s2ph) +
                fix * 4 * diff * s2ps * (sph + cph) * (sth - cth * (cph - sph));
    double a3 = 4 * sum - 4 * sth * aniso * (sth * sph * cph + cth * (cph + sph)) -
                fix * diff * c2ps * (2 * s2th * (cph + sph) - (3 + c2th) * s2ph) +
                4 * diff * s2ps * (cph - sph) * (sth - cth * (cph + sph));
    double a4 = 4 * sum - 4 * sth * aniso * (sth * sph * cph - cth * (cph + sph)) -
                diff * c2ps * (2 * s2th * (cph + sph) + (3 + c2th) * s2ph) -
                4 * diff * s2ps * (cph - sph) * (sth + cth * (cph + sph));

    double base = 3 * l1 + 3 * l2 + 2 * l3;
    double b1 = prod * (base + aniso * (c2th - 2 * s2th * sph + 2 * sth * sth * (s2ph + c2ph)) +
                        diff * c2ps * (2 * s2th * sph + (3 + c2th) * c2ph + (3 + c2th) * s2ph + 2 * sth * sth) +
                        4 * diff * s2ps * (sth * cph + cth * (c2ph - s2ph)));
    double b2 = prod * (base + aniso * (c2th + 2 * s2th * sph + 2 * sth * sth * (s2ph + c2ph)) +
                        diff * c2ps * (-2 * s2th * sph + (3 + c2th) * c2ph + (3 + c2th) * s2ph + 2 * sth * sth) +
                        fix * 4 * diff * s2ps * (sth * cph - cth * (c2ph - s2ph)));
    double b3 = prod * (base + aniso * (c2th - 2 * s2th * sph + 2 * sth * sth * (c2ph - s2ph)) +
                        diff * c2ps * (2 * s2th * sph + (3 + c2th) * c2ph - (3 + c2th) * s2ph + 2 * sth * sth) +
                        4 * diff * s2ps * (sth * cph - cth * (c2ph + s2ph)));
    double b4 = prod * (base + aniso * (c2th + 2 * s2th * sph + 2 * sth * sth * (c2ph - s2ph)) +
                        diff * c2ps * (-2 * s2th * sph + (3 + c2th) * c2ph - (3 + c2th) * s2ph + 2 * sth * sth) +
                        fix * 4 * diff * s2ps * (sth * cph + cth * (c2ph + s2ph)));

    double shared = cth * cth * (0.5 * cph * cph * (c2th + l3 - 1) * (l1 + diff * c2ps + l2) -
                                 sph * sph * (l1 * sps * sps + l2 * cps * cps) + l1 * l2) +
                    cph * cph * (l1 * l2 * sth * sth - std::pow(sth, 4) * (l1 * cps * cps + l2 * sps * sps)) -
                    std::pow(cth, 4) * cph * cph * (l1 * cps * cps + l2 * sps * sps);
    double l3_part = sps * sps * (sth * sth * (l2 - sps * sps * sph * sph) + l1 * sph * sph) +
                     cps * cps * (sth * sth * (l1 - 2 * sps * sps * sph * sph) + l2 * sph * sph) -
                     sth * sth * std::pow(cps, 4) * sph * sph;
    double g1 = 4 * prod *
                (shared +
                 0.5 * cth * cph * (-4 * l3 * sth * (l1 * cps * cps + l2 * sps * sps) - diff * s2ps * sph * (c2th + 2 * l3 - 1)) +
                 l3 * (l3_part + l1 * sth * s2ps * sph - 2 * l2 * sth * sps * cps * sph) + l1 * l2 * s2th * cph +
                 2 * std::pow(cth, 3) * diff * sps * cps * sph * cph);
    double g2 = 4 * prod *
                (shared + l3 * s2th * cph * (l1 * cps * cps + l2 * sps * sps) +
                 l3 * (l3_part - 2 * l1 * sth * sps * cps * sph + l2 * sth * s2ps * sph) - l1 * l2 * s2th * cph +
                 2 * cth * cph * diff * sps * cps * sph * (sth * sth - l3) +
                 2 * std::pow(cth, 3) * diff * sps * cps * sph * cph);

    std::array<double, 8> alpha{a1, a2, a3, a4, a4, a3, a2, a1};
    std::array<double, 8> beta{b1, b2, b3, b4, -b4, -b3, -b2, -b1};
    std::array<double, 8> gamma{g1, g2, g2, g1, g1, g2, g2, g1};
    double d = l1 * l2 * l3;
    std::array<FaceQuadratic, 8> out;
    for (std::size_t f = 0; f < 8; f++) {
        out[f].face_signs = polytope_faces()[f];
        out[f].alpha = -d * alpha[f] / 4;
        out[f].beta = beta[f] / 4;
        out[f].gamma = gamma[f] / 4;
        out[f].center_offset = -1;
    }
    return out;
}

}  // namespace mbcert
