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

#include "mbcert/spec_file.h"

#include <gtest/gtest.h>

#include <random>

#include "mbcert/sampling.h"

using namespace mbcert;

TEST(spec_file, ptm) {
    PauliTransferMatrix t = parse_channel_spec(R"({"ptm": [[1,0,0,0],[0.5,0,0,-0.5],[0,0,0,0],[0.5,0,0,0.5]]})");
    EXPECT_LT((t.matrix() - cq_example().matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(spec_file, named) {
    PauliTransferMatrix t = parse_channel_spec(R"({"named": {"family": "depolarizing", "p": 0.5}})");
    EXPECT_LT((t.matrix() - depolarizing(0.5).matrix()).cwiseAbs().maxCoeff(), 1e-16);
    t = parse_channel_spec(R"({"named": {"family": "identity"}})");
    EXPECT_TRUE(t.matrix().isIdentity());
    EXPECT_THROW(parse_channel_spec(R"({"named": {"family": "dephasing"}})"), SpecParseError);
    EXPECT_THROW(parse_channel_spec(R"({"named": {"family": "amplitude"}})"), SpecParseError);
    EXPECT_THROW(parse_channel_spec(R"({"named": {"family": "depolarizing", "p": 1.5}})"), SpecParseError);
}

TEST(spec_file, canonical_round_trip) {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 100; k++) {
        PauliTransferMatrix t = random_cp_channel(rng);
        std::string spec = decomposition_to_spec(canonical_decompose(t));
        PauliTransferMatrix back = parse_channel_spec(spec);
        EXPECT_LT((back.matrix() - t.matrix()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(spec_file, canonical_defaults) {
    PauliTransferMatrix t = parse_channel_spec(R"({"canonical": {"t": [0,0,0], "lambda": [-0.9,-0.3,0.2]}})");
    EXPECT_NEAR(t.matrix()(1, 1), -0.9, 1e-16);
    EXPECT_NEAR(t.matrix()(3, 3), 0.2, 1e-16);
    EXPECT_THROW(parse_channel_spec(R"({"canonical": {"t": [0,0]}})"), SpecParseError);
}

TEST(spec_file, malformed_channels) {
    EXPECT_THROW(parse_channel_spec("{"), SpecParseError);
    EXPECT_THROW(parse_channel_spec("[1, 2]"), SpecParseError);
    EXPECT_THROW(parse_channel_spec("{}"), SpecParseError);
    EXPECT_THROW(parse_channel_spec(R"({"ptm": [[1,0,0,0]]})"), SpecParseError);
    EXPECT_THROW(parse_channel_spec(R"({"ptm": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,"x"]]})"), SpecParseError);
    EXPECT_THROW(parse_channel_spec(R"({"ptm": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                                         "named": {"family": "identity"}})"),
                 SpecParseError);
}

TEST(spec_file, not_cp) {
    EXPECT_THROW(parse_channel_spec(R"({"ptm": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,-1]]})"), InvalidChannelError);
    EXPECT_THROW(parse_channel_spec(R"({"ptm": [[0.9,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})"), InvalidChannelError);
}

TEST(spec_file, states) {
    PauliCoeffState s = parse_state_spec(R"({"amplitudes": [[0.7071067811865475, 0], 0, 0, [0.7071067811865475, 0]]})");
    EXPECT_EQ(s.n_qubits(), 2);
    EXPECT_NEAR(s.coeffs()[15], 1, 1e-15);
    s = parse_state_spec(R"({"pauli_coeffs": [1, 0, 0, 1]})", 1);
    EXPECT_EQ(s.n_qubits(), 1);
    EXPECT_THROW(parse_state_spec(R"({"pauli_coeffs": [1, 0, 0, 1]})", 2), SpecParseError);
    EXPECT_THROW(parse_state_spec(R"({"pauli_coeffs": [1, 0, 0]})"), SpecParseError);
    EXPECT_THROW(parse_state_spec(R"({"pauli_coeffs": [1, 0, 0, 2]})"), InvalidStateError);
    EXPECT_THROW(parse_state_spec(R"({"amplitudes": [1,0,0,0,0,0,0,0]})"), UnsupportedSizeError);
    EXPECT_THROW(parse_state_spec(R"({"amplitudes": [1, 0]})", 3), UnsupportedSizeError);
    EXPECT_THROW(parse_state_spec(R"({"amplitudes": [[1, 0, 0]]})"), SpecParseError);
}

TEST(spec_file, missing_file) {
    EXPECT_THROW(read_text_file("/nonexistent/channel.json"), SpecParseError);
}
