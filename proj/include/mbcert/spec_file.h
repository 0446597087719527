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

#ifndef MBCERT_SPEC_FILE_H
#define MBCERT_SPEC_FILE_H

#include <string>

#include "mbcert/multiqubit.h"

namespace mbcert {

/// Parses one of
///   {"ptm": [[...4], ...4]}                                        row-major
///   {"canonical": {"t": [3], "lambda": [3], "post_angles": [3], "pre_angles": [3]}}
///   {"named": {"family": "depolarizing" | "dephasing" | "identity" | "cq_example", "p": x}}
/// Angles are (theta, phi, psi). Throws SpecParseError on malformed input and
/// InvalidChannelError when the channel is not CP.
PauliTransferMatrix parse_channel_spec(const std::string &text);

/// Canonical-form spec that parses back to the same channel.
std::string decomposition_to_spec(const ChannelDecomposition &d);

/// Parses {"amplitudes": [[re, im], ...]} or {"pauli_coeffs": [...]}. When n_qubits > 0 the
/// state must have that many qubits. Throws UnsupportedSizeError for n_qubits > 2.
PauliCoeffState parse_state_spec(const std::string &text, int n_qubits = 0);

/// Reads a whole file. Throws SpecParseError if it cannot be opened.
std::string read_text_file(const std::string &path);

}  // namespace mbcert

#endif
