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

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mbcert {

namespace {

using nlohmann::json;

std::array<double, 3> triple(const json &j, const char *name) {
    if (!j.is_array() || j.size() != 3) {
        throw SpecParseError(std::string("'") + name + "' must be an array of 3 numbers");
    }
    std::array<double, 3> out;
    for (int i = 0; i < 3; i++) {
        if (!j[i].is_number()) {
            throw SpecParseError(std::string("'") + name + "' must be an array of 3 numbers");
        }
        out[i] = j[i].get<double>();
    }
    return out;
}

UnitaryAngles angles(const json &j, const char *name) {
    auto a = triple(j, name);
    return {a[0], a[1], a[2]};
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw SpecParseError(std::string("invalid JSON: ") + e.what());
    }
}

PauliTransferMatrix from_named(const json &j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
        throw SpecParseError("'named' needs a string 'family'");
    }
    std::string family = j["family"];
    auto need_p = [&]() {
        if (!j.contains("p") || !j["p"].is_number()) {
            throw SpecParseError("family '" + family + "' needs a numeric 'p'");
        }
        double p = j["p"];
        if (p < 0 || p > 1) {
            throw SpecParseError("'p' must lie in [0, 1]");
        }
        return p;
    };
    if (family == "depolarizing") {
        return depolarizing(need_p());
    }
    if (family == "dephasing") {
        return dephasing(need_p());
    }
    if (family == "identity") {
        return PauliTransferMatrix::identity();
    }
    if (family == "cq_example") {
        return cq_example();
    }
    throw SpecParseError("unknown family '" + family + "'");
}

PauliTransferMatrix from_canonical(const json &j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("lambda")) {
        throw SpecParseError("'canonical' needs 't' and 'lambda'");
    }
    ChannelDecomposition d;
    d.canonical.t = triple(j["t"], "t");
    d.canonical.lam = triple(j["lambda"], "lambda");
    if (j.contains("post_angles")) {
        d.post = angles(j["post_angles"], "post_angles");
    }
    if (j.contains("pre_angles")) {
        d.pre = angles(j["pre_angles"], "pre_angles");
    }
    return assemble(d);
}

PauliTransferMatrix from_ptm(const json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw SpecParseError("'ptm' must be a 4x4 array");
    }
    Mat4 m;
    for (int r = 0; r < 4; r++) {
        if (!j[r].is_array() || j[r].size() != 4) {
            throw SpecParseError("'ptm' must be a 4x4 array");
        }
        for (int c = 0; c < 4; c++) {
            if (!j[r][c].is_number()) {
                throw SpecParseError("'ptm' entries must be numbers");
            }
            m(r, c) = j[r][c].get<double>();
        }
    }
    return PauliTransferMatrix::from_matrix(m);
}

}  // namespace

PauliTransferMatrix parse_channel_spec(const std::string &text) {
    json j = parse_json(text);
    if (!j.is_object()) {
        throw SpecParseError("channel spec must be a JSON object");
    }
    int present = (int)j.contains("ptm") + (int)j.contains("canonical") + (int)j.contains("named");
    if (present != 1) {
        throw SpecParseError("channel spec needs exactly one of 'ptm', 'canonical', 'named'");
    }
    PauliTransferMatrix t = j.contains("ptm")         ? from_ptm(j["ptm"])
                            : j.contains("canonical") ? from_canonical(j["canonical"])
                                                      : from_named(j["named"]);
    if (!check_cp(t)) {
        throw InvalidChannelError("channel in spec is not completely positive");
    }
    return t;
}

std::string decomposition_to_spec(const ChannelDecomposition &d) {
    json j;
    j["canonical"]["t"] = d.canonical.t;
    j["canonical"]["lambda"] = d.canonical.lam;
    j["canonical"]["post_angles"] = {d.post.theta, d.post.phi, d.post.psi};
    j["canonical"]["pre_angles"] = {d.pre.theta, d.pre.phi, d.pre.psi};
    return j.dump(2);
}

PauliCoeffState parse_state_spec(const std::string &text, int n_qubits) {
    if (n_qubits > kMaxQubits) {
        throw UnsupportedSizeError("at most 2 qubits are supported");
    }
    json j = parse_json(text);
    if (!j.is_object()) {
        throw SpecParseError("state spec must be a JSON object");
    }
    bool has_amps = j.contains("amplitudes");
    bool has_coeffs = j.contains("pauli_coeffs");
    if (has_amps == has_coeffs) {
        throw SpecParseError("state spec needs exactly one of 'amplitudes', 'pauli_coeffs'");
    }
    PauliCoeffState state = [&] {
        if (has_amps) {
            const json &a = j["amplitudes"];
            if (!a.is_array()) {
                throw SpecParseError("'amplitudes' must be an array");
            }
            std::vector<std::complex<double>> amps;
            for (const auto &x : a) {
                if (x.is_number()) {
                    amps.emplace_back(x.get<double>(), 0.0);
                } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
                    amps.emplace_back(x[0].get<double>(), x[1].get<double>());
                } else {
                    throw SpecParseError("each amplitude must be a number or [re, im]");
                }
            }
            if (amps.size() > 4 && (amps.size() & (amps.size() - 1)) == 0) {
                throw UnsupportedSizeError("at most 2 qubits are supported");
            }
            return PauliCoeffState::from_amplitudes(amps);
        }
        const json &c = j["pauli_coeffs"];
        if (!c.is_array()) {
            throw SpecParseError("'pauli_coeffs' must be an array");
        }
        VectorXd v(c.size());
        for (std::size_t i = 0; i < c.size(); i++) {
            if (!c[i].is_number()) {
                throw SpecParseError("'pauli_coeffs' entries must be numbers");
            }
            v[i] = c[i].get<double>();
        }
        int n = v.size() == 4 ? 1 : v.size() == 16 ? 2 : 0;
        if (n == 0) {
            if (v.size() > 16) {
                throw UnsupportedSizeError("at most 2 qubits are supported");
            }
            throw SpecParseError("'pauli_coeffs' must have 4 or 16 entries");
        }
        return PauliCoeffState::from_coeffs(n, v);
    }();
    if (n_qubits > 0 && state.n_qubits() != n_qubits) {
        throw SpecParseError("state has a different number of qubits than requested");
    }
    return state;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw SpecParseError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mbcert
