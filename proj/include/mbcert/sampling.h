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

#ifndef MBCERT_SAMPLING_H
#define MBCERT_SAMPLING_H

#include <random>

#include "mbcert/channel.h"

namespace mbcert {

/// Uniform on the sphere (pure) or in the ball.
BlochVector random_bloch(std::mt19937_64 &rng, bool pure);

/// Angles of a Haar-random rotation.
UnitaryAngles random_unitary_angles(std::mt19937_64 &rng);

/// Haar-random SO(3) element.
Rotation3 random_rotation(std::mt19937_64 &rng);

/// Channel with `rank` Kraus operators cut from a Haar-like random isometry. rank in 1..4.
PauliTransferMatrix random_cp_channel(std::mt19937_64 &rng, int rank);

/// rank drawn uniformly from 1..4.
PauliTransferMatrix random_cp_channel(std::mt19937_64 &rng);

}  // namespace mbcert

#endif
